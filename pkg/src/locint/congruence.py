"""Congruences on a finite lattice, the congruence frame C(L), and the
coframe view S(L) of sublocales.

A congruence is an equivalence relation compatible with meets (C1) and
joins (C2); at finite scale the countable-join axiom reduces to its binary
form.  Congruences are stored as partitions (block maps), which gives O(1)
membership tests and a canonical equality.  The congruence frame is
enumerated as the join-closure of all principal congruences, ordered by
inclusion; its order-dual is the coframe of sublocales, where the open
sublocale o(a) is the quotient by delta(a) = {(x,y) | x/\\a = y/\\a} and the
closed sublocale c(a) the quotient by nabla(a) = {(x,y) | x\\/a = y\\/a}.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import MalformedDocument, SizeLimitExceeded
from .lattice import SOFT_SIZE_LIMIT, FiniteLattice

#: Enumeration guard: beyond this many congruences the lattice facade of
#: C(L) (with its O(n^3) validation) stops being desk scale.
CONGRUENCE_LIMIT = 256


class Congruence:
    """A lattice congruence stored as a partition of the carrier.

    Block labels are canonical: blocks are numbered in order of first
    occurrence along the carrier's element order, so two equal congruences
    have identical ``block_of`` tuples.
    """

    __slots__ = ("lattice", "block_of", "_hash")

    def __init__(self, lattice: FiniteLattice, block_of: Sequence[int]):
        relabel: Dict[int, int] = {}
        canon = []
        for b in block_of:
            if b not in relabel:
                relabel[b] = len(relabel)
            canon.append(relabel[b])
        self.lattice = lattice
        self.block_of = tuple(canon)
        self._hash = hash(self.block_of)

    @classmethod
    def equality(cls, lattice: FiniteLattice) -> "Congruence":
        return cls(lattice, range(lattice.size))

    @classmethod
    def all_pairs(cls, lattice: FiniteLattice) -> "Congruence":
        return cls(lattice, [0] * lattice.size)

    @classmethod
    def from_blocks(cls, lattice: FiniteLattice, blocks: Iterable[Iterable[str]]) -> "Congruence":
        block_of = [-1] * lattice.size
        for b, members in enumerate(blocks):
            for name in members:
                i = lattice.index(name)
                if block_of[i] != -1:
                    raise MalformedDocument(f"element {name!r} appears in two blocks")
                block_of[i] = b
        if -1 in block_of:
            missing = lattice.elements[block_of.index(-1)]
            raise MalformedDocument(f"element {missing!r} is not covered by the partition")
        return cls(lattice, block_of)

    def relates(self, a: str, b: str) -> bool:
        return self.block_of[self.lattice.index(a)] == self.block_of[self.lattice.index(b)]

    @property
    def n_blocks(self) -> int:
        return max(self.block_of) + 1

    def blocks(self) -> Tuple[Tuple[str, ...], ...]:
        out: List[List[str]] = [[] for _ in range(self.n_blocks)]
        for i, b in enumerate(self.block_of):
            out[b].append(self.lattice.elements[i])
        return tuple(tuple(block) for block in out)

    def block_containing(self, a: str) -> Tuple[str, ...]:
        return self.blocks()[self.block_of[self.lattice.index(a)]]

    def refines(self, other: "Congruence") -> bool:
        """self <= other in C(L): every self-block sits inside an other-block."""
        seen: Dict[int, int] = {}
        for mine, theirs in zip(self.block_of, other.block_of):
            if mine in seen:
                if seen[mine] != theirs:
                    return False
            else:
                seen[mine] = theirs
        return True

    def partition_name(self) -> str:
        return "{" + "|".join(",".join(b) for b in self.blocks()) + "}"

    def validate_congruence(self) -> None:
        """Check (C1) and (C2); binary compatibility plus transitivity of the
        stored partition implies the general finite forms."""
        lat = self.lattice
        n = lat.size
        els = lat.elements
        for i in range(n):
            for j in range(i + 1, n):
                if self.block_of[i] != self.block_of[j]:
                    continue
                for k in range(n):
                    mi = lat.meet(els[i], els[k])
                    mj = lat.meet(els[j], els[k])
                    if self.block_of[lat.index(mi)] != self.block_of[lat.index(mj)]:
                        raise MalformedDocument(
                            f"(C1) fails: {els[i]!r}~{els[j]!r} but "
                            f"{mi!r}!~{mj!r} after meeting with {els[k]!r}")
                    ji = lat.join(els[i], els[k])
                    jj = lat.join(els[j], els[k])
                    if self.block_of[lat.index(ji)] != self.block_of[lat.index(jj)]:
                        raise MalformedDocument(
                            f"(C2) fails: {els[i]!r}~{els[j]!r} but "
                            f"{ji!r}!~{jj!r} after joining with {els[k]!r}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Congruence)
                and self.block_of == other.block_of
                and (self.lattice is other.lattice or self.lattice == other.lattice))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Congruence({self.partition_name()})"


# -- construction of particular congruences ------------------------------------


def _close(lattice: FiniteLattice, merges: Iterable[Tuple[int, int]]) -> Tuple[int, ...]:
    """Smallest congruence containing the given index pairs: union-find
    closure under z |-> (x/\\z, y/\\z) and (x\\/z, y\\/z)."""
    n = lattice.size
    meet = lattice._meet
    join = lattice._join
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = list(merges)
    while queue:
        x, y = queue.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        for z in range(n):
            a, b = meet[x][z], meet[y][z]
            if find(a) != find(b):
                queue.append((a, b))
            a, b = join[x][z], join[y][z]
            if find(a) != find(b):
                queue.append((a, b))
    return tuple(find(i) for i in range(n))


def principal_congruence(lattice: FiniteLattice, a: str, b: str) -> Congruence:
    """Smallest congruence identifying a and b."""
    return Congruence(lattice, _close(lattice, [(lattice.index(a), lattice.index(b))]))


def nabla(lattice: FiniteLattice, a: str) -> Congruence:
    """The closed congruence: x ~ y iff x \\/ a = y \\/ a."""
    return Congruence(lattice, [lattice._join[i][lattice.index(a)] for i in range(lattice.size)])


def delta(lattice: FiniteLattice, a: str) -> Congruence:
    """The open congruence: x ~ y iff x /\\ a = y /\\ a."""
    return Congruence(lattice, [lattice._meet[i][lattice.index(a)] for i in range(lattice.size)])


def open_closed(lattice: FiniteLattice, a: str) -> Tuple[Congruence, Congruence]:
    """The complementary pair (delta(a), nabla(a)) attached to an element."""
    return delta(lattice, a), nabla(lattice, a)


def congruence_meet(c: Congruence, d: Congruence) -> Congruence:
    """Intersection of relations = common refinement of partitions."""
    pairs = list(zip(c.block_of, d.block_of))
    labels: Dict[Tuple[int, int], int] = {}
    out = []
    for p in pairs:
        if p not in labels:
            labels[p] = len(labels)
        out.append(labels[p])
    return Congruence(c.lattice, out)


def congruence_join(c: Congruence, d: Congruence) -> Congruence:
    """Congruence generated by the union of the two relations."""
    merges = []
    for cong in (c, d):
        first: Dict[int, int] = {}
        for i, b in enumerate(cong.block_of):
            if b in first:
                merges.append((first[b], i))
            else:
                first[b] = i
    return Congruence(c.lattice, _close(c.lattice, merges))


def quotient(lattice: FiniteLattice, theta: Congruence) -> FiniteLattice:
    """The quotient lattice of blocks with the induced order."""
    blocks = theta.blocks()
    names = [block_name(b) for b in blocks]
    reps = [lattice.index(b[0]) for b in blocks]
    pairs = []
    for i, ri in enumerate(reps):
        for j, rj in enumerate(reps):
            m = lattice._meet[ri][rj]
            if theta.block_of[m] == theta.block_of[ri]:
                pairs.append((names[i], names[j]))
    return FiniteLattice(names, pairs)


def block_name(members: Sequence[str]) -> str:
    return members[0] if len(members) == 1 else "{" + ",".join(members) + "}"


# -- the congruence frame -------------------------------------------------------


def enumerate_congruences(lattice: FiniteLattice) -> "CongruenceFrame":
    """All congruences of the lattice, as the join-closure of the principal
    ones (every congruence is the join of the principal congruences it
    contains)."""
    if lattice.size > SOFT_SIZE_LIMIT:
        raise SizeLimitExceeded(
            f"congruence enumeration limited to {SOFT_SIZE_LIMIT}-element lattices")
    found: Dict[Tuple[int, ...], Congruence] = {}
    eq = Congruence.equality(lattice)
    found[eq.block_of] = eq
    stack = [eq]
    for i, a in enumerate(lattice.elements):
        for b in lattice.elements[i + 1:]:
            c = principal_congruence(lattice, a, b)
            if c.block_of not in found:
                found[c.block_of] = c
                stack.append(c)
    while stack:
        c = stack.pop()
        for d in list(found.values()):
            j = congruence_join(c, d)
            if j.block_of not in found:
                if len(found) >= CONGRUENCE_LIMIT:
                    raise SizeLimitExceeded(
                        f"more than {CONGRUENCE_LIMIT} congruences; beyond desk scale")
                found[j.block_of] = j
                stack.append(j)
    ordered = sorted(found.values(), key=lambda c: (-c.n_blocks, c.block_of))
    return CongruenceFrame(lattice, tuple(ordered))


class CongruenceFrame:
    """The frame C(L) of all congruences, ordered by inclusion.

    Meets are partition intersections and joins are generated closures;
    ``as_lattice`` exposes the frame as a FiniteLattice over canonical
    partition names so that functions and simple functions can use it as a
    carrier.
    """

    __slots__ = ("lattice", "congruences", "_index", "_meet_memo", "_join_memo",
                 "_facade", "_view", "_nabla", "_delta")

    def __init__(self, lattice: FiniteLattice, congruences: Tuple[Congruence, ...]):
        self.lattice = lattice
        self.congruences = congruences
        self._index = {c.block_of: i for i, c in enumerate(congruences)}
        self._meet_memo: Dict[Tuple[int, int], int] = {}
        self._join_memo: Dict[Tuple[int, int], int] = {}
        self._facade: Optional[FiniteLattice] = None
        self._view = None
        self._nabla = {a: self.index_of(nabla(lattice, a)) for a in lattice.elements}
        self._delta = {a: self.index_of(delta(lattice, a)) for a in lattice.elements}

    @property
    def size(self) -> int:
        return len(self.congruences)

    def index_of(self, theta: Congruence) -> int:
        try:
            return self._index[theta.block_of]
        except KeyError:
            raise MalformedDocument(
                f"{theta.partition_name()} is not a congruence of this lattice") from None

    @property
    def bottom(self) -> Congruence:
        """The equality relation 0_C = nabla(0) = delta(1)."""
        return self.congruences[0]

    @property
    def top(self) -> Congruence:
        """The all-pairs relation 1_C = nabla(1) = delta(0)."""
        return self.congruences[-1]

    def nabla_of(self, a: str) -> Congruence:
        return self.congruences[self._nabla[a]]

    def delta_of(self, a: str) -> Congruence:
        return self.congruences[self._delta[a]]

    def meet(self, c: Congruence, d: Congruence) -> Congruence:
        i, j = self.index_of(c), self.index_of(d)
        key = (i, j) if i <= j else (j, i)
        k = self._meet_memo.get(key)
        if k is None:
            k = self.index_of(congruence_meet(c, d))
            self._meet_memo[key] = k
        return self.congruences[k]

    def join(self, c: Congruence, d: Congruence) -> Congruence:
        i, j = self.index_of(c), self.index_of(d)
        key = (i, j) if i <= j else (j, i)
        k = self._join_memo.get(key)
        if k is None:
            k = self.index_of(congruence_join(c, d))
            self._join_memo[key] = k
        return self.congruences[k]

    def complement(self, theta: Congruence) -> Congruence:
        facade = self.as_lattice()
        name = facade.complement(theta.partition_name())
        return self.congruence_of_element(name)

    def complement_or_none(self, theta: Congruence) -> Optional[Congruence]:
        facade = self.as_lattice()
        name = facade.complement_or_none(theta.partition_name())
        return None if name is None else self.congruence_of_element(name)

    def as_lattice(self) -> FiniteLattice:
        if self._facade is None:
            names = [c.partition_name() for c in self.congruences]
            pairs = []
            for i, c in enumerate(self.congruences):
                for j, d in enumerate(self.congruences):
                    if c.refines(d):
                        pairs.append((names[i], names[j]))
            self._facade = FiniteLattice(names, pairs)
        return self._facade

    def congruence_of_element(self, name: str) -> Congruence:
        return self.congruences[self.as_lattice().index(name)]

    def element_of(self, theta: Congruence) -> str:
        return theta.partition_name()

    def labels_of(self, theta: Congruence) -> Dict[str, Tuple[str, ...]]:
        """Which nabla(a) / delta(a) this congruence equals, if any."""
        i = self.index_of(theta)
        return {
            "nabla": tuple(a for a in self.lattice.elements if self._nabla[a] == i),
            "delta": tuple(a for a in self.lattice.elements if self._delta[a] == i),
        }

    def view(self) -> "SublocaleView":
        if self._view is None:
            self._view = SublocaleView(self)
        return self._view

    def __repr__(self) -> str:
        return f"CongruenceFrame({self.size} congruences on {self.lattice!r})"


class SublocaleView:
    """S(L): the congruence list of C(L) with the order reversed.

    A sublocale is identified with its congruence; S <= T holds iff
    theta_T is contained in theta_S, meets in S(L) are joins in C(L) and
    vice versa.  The whole lattice L is the quotient by equality and the
    void sublocale the quotient by the all-pairs relation.
    """

    __slots__ = ("frame", "_pairs", "_order_pairs", "_atoms")

    def __init__(self, frame: CongruenceFrame):
        self.frame = frame
        self._pairs = None
        self._order_pairs = None
        self._atoms = None

    @property
    def sublocales(self) -> Tuple[Congruence, ...]:
        return self.frame.congruences

    @property
    def top(self) -> Congruence:
        """1_S(L): the whole lattice (quotient by equality)."""
        return self.frame.bottom

    @property
    def bottom(self) -> Congruence:
        """0_S(L): the void sublocale (quotient by all pairs)."""
        return self.frame.top

    def leq(self, s: Congruence, t: Congruence) -> bool:
        return t.refines(s)

    def meet(self, s: Congruence, t: Congruence) -> Congruence:
        return self.frame.join(s, t)

    def join(self, s: Congruence, t: Congruence) -> Congruence:
        return self.frame.meet(s, t)

    def complement(self, s: Congruence) -> Congruence:
        return self.frame.complement(s)

    def is_complemented(self, s: Congruence) -> bool:
        return self.frame.complement_or_none(s) is not None

    def open_sublocale(self, a: str) -> Congruence:
        return self.frame.delta_of(a)

    def closed_sublocale(self, a: str) -> Congruence:
        return self.frame.nabla_of(a)

    def index_of(self, s: Congruence) -> int:
        return self.frame.index_of(s)

    def atoms(self) -> Tuple[Congruence, ...]:
        """Minimal nonvoid sublocales; used to seed additive random measures."""
        if self._atoms is None:
            subs = self.sublocales
            out = []
            for s in subs:
                if s == self.bottom:
                    continue
                if all(t == self.bottom or t == s or not self.leq(t, s) for t in subs):
                    out.append(s)
            self._atoms = tuple(out)
        return self._atoms

    # -- naming ---------------------------------------------------------------

    def ref_name(self, s: Congruence) -> str:
        if s == self.top:
            return "L"
        if s == self.bottom:
            return "void"
        labels = self.frame.labels_of(s)
        if labels["delta"]:
            return f"open:{labels['delta'][0]}"
        if labels["nabla"]:
            return f"closed:{labels['nabla'][0]}"
        return "blocks:" + "|".join(",".join(b) for b in s.blocks())

    def resolve_ref(self, ref) -> Congruence:
        frame = self.frame
        if isinstance(ref, dict):
            blocks = ref.get("blocks")
            if not isinstance(blocks, list):
                raise MalformedDocument(f"bad sublocale reference: {ref!r}")
            theta = Congruence.from_blocks(frame.lattice, blocks)
            frame.index_of(theta)
            return theta
        if not isinstance(ref, str):
            raise MalformedDocument(f"bad sublocale reference: {ref!r}")
        text = ref.strip()
        if text == "L":
            return self.top
        if text == "void":
            return self.bottom
        if text.startswith("open:"):
            return self.open_sublocale(_known_element(frame.lattice, text[5:]))
        if text.startswith("closed:"):
            return self.closed_sublocale(_known_element(frame.lattice, text[7:]))
        if text.startswith("blocks:"):
            blocks = [b.split(",") for b in text[7:].split("|")]
            theta = Congruence.from_blocks(frame.lattice, blocks)
            frame.index_of(theta)
            return theta
        raise MalformedDocument(f"unknown sublocale reference {ref!r}")

    # -- precomputed pair tables for measure validation ------------------------

    def modularity_pairs(self) -> List[Tuple[int, int, int, int]]:
        """(i, j, index of S_i /\\ S_j, index of S_i \\/ S_j) for all i < j."""
        if self._pairs is None:
            subs = self.sublocales
            idx = self.frame.index_of
            out = []
            for i in range(len(subs)):
                for j in range(i + 1, len(subs)):
                    out.append((i, j,
                                idx(self.meet(subs[i], subs[j])),
                                idx(self.join(subs[i], subs[j]))))
            self._pairs = out
        return self._pairs

    def order_pairs(self) -> List[Tuple[int, int]]:
        """(i, j) whenever S_i <= S_j in the sublocale order."""
        if self._order_pairs is None:
            subs = self.sublocales
            self._order_pairs = [(i, j)
                                 for i in range(len(subs))
                                 for j in range(len(subs))
                                 if i != j and self.leq(subs[i], subs[j])]
        return self._order_pairs


def _known_element(lattice: FiniteLattice, name: str) -> str:
    lattice.index(name)
    return name
