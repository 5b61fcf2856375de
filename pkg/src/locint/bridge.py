"""Finite classical measurable spaces as an independent oracle.

A finite set with a sigma-algebra of subsets and an additive weight map is
the classical counterpart of a Boolean carrier: the algebra, ordered by
inclusion, is a finite Boolean lattice; a rational-valued simple function
corresponds one-to-one with a canonical simple function over the
congruence frame whose term elements are the closed congruences of its
level sets; and the classical integral (computed here purely with set
arithmetic) must agree exactly, classification included, with the
pointfree integral against the extension of the weight map to all
sublocales (open sublocales keep their classical value)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from .congruence import SublocaleView
from .errors import AxiomViolation, ConsistencyError, MalformedDocument, NotIntegrable
from .integrate import SummabilityReport, classify, integrate_simple, report_value
from .lattice import FiniteLattice, subset_name
from .measure import Measure, validate_measure
from .rationals import ExtValue, ext_add, ext_scale, format_extended
from .simple import SimpleFunction


class FiniteMeasurableSpace:
    """A finite point set, a sigma-algebra of subsets and an additive map
    on it.  At this scale countable unions are finite unions, so the
    algebra is just a Boolean subalgebra of the powerset."""

    __slots__ = ("points", "algebra", "lam", "_names", "_lattice", "_atoms")

    def __init__(self, points: Sequence[str],
                 algebra: Iterable[FrozenSet[str]],
                 lam: Mapping[FrozenSet[str], ExtValue],
                 _algebra_checked: bool = False):
        self.points = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise MalformedDocument("duplicate point names")
        universe = frozenset(self.points)
        sets = {frozenset(s) for s in algebra}
        if not _algebra_checked:
            for s in sets:
                if not s <= universe:
                    raise MalformedDocument(f"subset {sorted(s)!r} contains unknown points")
            if frozenset() not in sets or universe not in sets:
                raise MalformedDocument("the algebra must contain the empty set and the whole set")
            for s in sets:
                if universe - s not in sets:
                    raise MalformedDocument(
                        f"the algebra is not closed under complement at {sorted(s)!r}")
            for s in sets:
                for t in sets:
                    if s | t not in sets:
                        raise MalformedDocument(
                            f"the algebra is not closed under union at {sorted(s)!r}, {sorted(t)!r}")
        order = {p: i for i, p in enumerate(self.points)}
        self.algebra = tuple(sorted(sets, key=lambda s: (len(s), sorted(order[p] for p in s))))
        self.lam: Dict[FrozenSet[str], ExtValue] = dict(lam)
        for s in self.algebra:
            if s not in self.lam:
                raise MalformedDocument(f"no weight for subset {self.name_of(s)!r}")
        if self.lam[frozenset()] != Fraction(0):
            raise AxiomViolation("lambda(empty) must be 0")
        for s in self.algebra:
            for t in self.algebra:
                if not (s & t):
                    if ext_add(self.lam[s], self.lam[t]) != self.lam[s | t]:
                        raise AxiomViolation(
                            f"lambda is not additive on {self.name_of(s)!r}, {self.name_of(t)!r}")
        self._names = None
        self._lattice = None
        self._atoms = None

    @classmethod
    def powerset(cls, points: Sequence[str],
                 point_weights: Mapping[str, ExtValue]) -> "FiniteMeasurableSpace":
        """Full powerset algebra with lambda extended additively from the
        singleton weights."""
        points = tuple(points)
        subsets = []
        for mask in range(1 << len(points)):
            subsets.append(frozenset(p for i, p in enumerate(points) if mask >> i & 1))
        lam = {}
        for s in subsets:
            total: ExtValue = Fraction(0)
            for p in s:
                if p not in point_weights:
                    raise MalformedDocument(f"no weight for point {p!r}")
                total = ext_add(total, point_weights[p])
            lam[s] = total
        return cls(points, subsets, lam, _algebra_checked=True)

    @classmethod
    def from_atom_weights(cls, points: Sequence[str],
                          algebra: Iterable[FrozenSet[str]],
                          atom_weights: Mapping[FrozenSet[str], ExtValue]) -> "FiniteMeasurableSpace":
        """lambda extended additively from weights on the atoms of the algebra."""
        sets = {frozenset(s) for s in algebra}
        atoms = _atoms_of(sets)
        lam = {}
        for s in sets:
            total: ExtValue = Fraction(0)
            for a in atoms:
                if a <= s:
                    if a not in atom_weights:
                        raise MalformedDocument(f"no weight for atom {sorted(a)!r}")
                    total = ext_add(total, atom_weights[a])
            lam[s] = total
        return cls(points, sets, lam)

    def name_of(self, subset: FrozenSet[str]) -> str:
        return subset_name(subset, self.points)

    def subset_of_name(self, name: str) -> FrozenSet[str]:
        for s in self.algebra:
            if self.name_of(s) == name:
                return s
        raise MalformedDocument(f"{name!r} is not a member of the algebra")

    def atoms(self) -> Tuple[FrozenSet[str], ...]:
        if self._atoms is None:
            self._atoms = _atoms_of(set(self.algebra))
        return self._atoms

    def lattice(self) -> FiniteLattice:
        """The algebra as a lattice under inclusion."""
        if self._lattice is None:
            names = [self.name_of(s) for s in self.algebra]
            pairs = []
            for i, s in enumerate(self.algebra):
                for j, t in enumerate(self.algebra):
                    if s <= t:
                        pairs.append((names[i], names[j]))
            self._lattice = FiniteLattice(names, pairs)
        return self._lattice

    def view(self) -> SublocaleView:
        return self.lattice().congruence_frame().view()


def _atoms_of(sets) -> Tuple[FrozenSet[str], ...]:
    nonempty = [s for s in sets if s]
    atoms = [s for s in nonempty if not any(t < s for t in nonempty)]
    return tuple(sorted(atoms, key=lambda s: sorted(s)))


class ClassicalSimpleFunction:
    """A rational-valued function on the points with measurable level sets."""

    __slots__ = ("space", "values")

    def __init__(self, space: FiniteMeasurableSpace, values: Mapping[str, Fraction]):
        self.space = space
        missing = [p for p in space.points if p not in values]
        if missing:
            raise MalformedDocument(f"no value for point(s) {missing!r}")
        extra = [p for p in values if p not in space.points]
        if extra:
            raise MalformedDocument(f"values for unknown point(s) {extra!r}")
        self.values = {p: Fraction(values[p]) for p in space.points}
        algebra = set(space.algebra)
        for _, level in self.level_sets():
            if level not in algebra:
                raise MalformedDocument(
                    f"level set {space.name_of(level)!r} is not in the algebra")

    def level_sets(self) -> Tuple[Tuple[Fraction, FrozenSet[str]], ...]:
        by_value: Dict[Fraction, set] = {}
        for p, v in self.values.items():
            by_value.setdefault(v, set()).add(p)
        return tuple((v, frozenset(s)) for v, s in sorted(by_value.items()))

    def preimage_below(self, r: Fraction) -> FrozenSet[str]:
        return frozenset(p for p, v in self.values.items() if v < r)

    def preimage_above(self, r: Fraction) -> FrozenSet[str]:
        return frozenset(p for p, v in self.values.items() if v > r)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ClassicalSimpleFunction)
                and self.values == other.values
                and self.space is other.space)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.values.items())))

    def __repr__(self) -> str:
        return "ClassicalSimpleFunction(" + ", ".join(
            f"{p}={v}" for p, v in self.values.items()) + ")"


def classical_add(f: ClassicalSimpleFunction, g: ClassicalSimpleFunction) -> ClassicalSimpleFunction:
    return ClassicalSimpleFunction(f.space, {p: f.values[p] + g.values[p] for p in f.space.points})


def classical_mul(f: ClassicalSimpleFunction, g: ClassicalSimpleFunction) -> ClassicalSimpleFunction:
    return ClassicalSimpleFunction(f.space, {p: f.values[p] * g.values[p] for p in f.space.points})


def classical_scale(lam: Fraction, f: ClassicalSimpleFunction) -> ClassicalSimpleFunction:
    return ClassicalSimpleFunction(f.space, {p: lam * v for p, v in f.values.items()})


def classical_integral(f: ClassicalSimpleFunction,
                       over: Optional[FrozenSet[str]] = None
                       ) -> Tuple[ExtValue, SummabilityReport]:
    """sum_r r * lambda(level_r /\\ A), split into parts with the same
    integrability guard as the pointfree side.  Pure set arithmetic."""
    space = f.space
    if over is None:
        over = frozenset(space.points)
    if over not in set(space.algebra):
        raise MalformedDocument(
            f"{space.name_of(over)!r} is not a member of the algebra")
    pos: ExtValue = Fraction(0)
    neg: ExtValue = Fraction(0)
    for r, level in f.level_sets():
        weight = space.lam[level & over]
        if r > 0:
            pos = ext_add(pos, ext_scale(r, weight))
        elif r < 0:
            neg = ext_add(neg, ext_scale(-r, weight))
    report = classify(pos, neg)
    return report_value(report), report


def to_localic(f: ClassicalSimpleFunction) -> SimpleFunction:
    """The pointfree counterpart: sum_i r_i * chi(nabla(A_i)) over the
    congruence frame of the algebra, with A_i the level sets."""
    space = f.space
    frame = space.lattice().congruence_frame()
    facade = frame.as_lattice()
    terms = []
    for r, level in f.level_sets():
        theta = frame.nabla_of(space.name_of(level))
        terms.append((r, theta.partition_name()))
    return SimpleFunction(facade, terms)


def from_localic(g: SimpleFunction, space: FiniteMeasurableSpace) -> ClassicalSimpleFunction:
    """Inverse of to_localic for functions whose term elements are closed
    congruences of the algebra."""
    frame = space.lattice().congruence_frame()
    values: Dict[str, Fraction] = {}
    for r, element in g.terms:
        theta = frame.congruence_of_element(element)
        labels = frame.labels_of(theta)
        if not labels["nabla"]:
            raise MalformedDocument(
                f"term element {element!r} is not a closed congruence")
        for p in space.subset_of_name(labels["nabla"][0]):
            values[p] = r
    for p in space.points:
        values.setdefault(p, Fraction(0))
    return ClassicalSimpleFunction(space, values)


def extend_measure(space: FiniteMeasurableSpace) -> Measure:
    """The measure on S(A) determined by lambda: every congruence of the
    finite Boolean algebra A is nabla(B) for a unique B, and the quotient
    by nabla(B) is the open sublocale of the complement, so it gets
    lambda(X minus B)."""
    lat = space.lattice()
    frame = lat.congruence_frame()
    view = frame.view()
    values = {}
    for theta in frame.congruences:
        b_name = lat.join_all(theta.block_containing(lat.bottom))
        values[theta] = space.lam[frozenset(space.points) - space.subset_of_name(b_name)]
    return validate_measure(view, values)


@dataclass(frozen=True)
class BridgeReport:
    """Both integrals side by side, with their classifications."""

    classical_value: Optional[ExtValue]
    localic_value: Optional[ExtValue]
    classical: SummabilityReport
    localic: SummabilityReport

    @property
    def equal(self) -> bool:
        return (self.classical_value == self.localic_value
                and self.classical.classification == self.localic.classification)


def bridge_check(space: FiniteMeasurableSpace, f: ClassicalSimpleFunction,
                 over: Optional[FrozenSet[str]] = None) -> BridgeReport:
    """Classical integral versus pointfree integral of the counterpart over
    the matching open sublocale; exact equality (value and classification)
    is asserted."""
    if over is None:
        over = frozenset(space.points)
    try:
        c_value, c_report = classical_integral(f, over)
    except NotIntegrable:
        c_value, c_report = None, _not_integrable_report(f, over)
    g = to_localic(f)
    mu = extend_measure(space)
    view = mu.view
    sub = view.open_sublocale(space.name_of(over))
    try:
        l_value, l_report = integrate_simple(g, mu, sub)
    except NotIntegrable:
        from .integrate import summability
        l_value, l_report = None, summability(g, mu, sub)
    report = BridgeReport(c_value, l_value, c_report, l_report)
    if not report.equal:
        raise ConsistencyError(
            "bridge mismatch: classical "
            f"{_fmt(c_value)}/{c_report.classification} vs pointfree "
            f"{_fmt(l_value)}/{l_report.classification}")
    return report


def _not_integrable_report(f: ClassicalSimpleFunction, over) -> SummabilityReport:
    space = f.space
    pos: ExtValue = Fraction(0)
    neg: ExtValue = Fraction(0)
    for r, level in f.level_sets():
        weight = space.lam[level & over]
        if r > 0:
            pos = ext_add(pos, ext_scale(r, weight))
        elif r < 0:
            neg = ext_add(neg, ext_scale(-r, weight))
    return classify(pos, neg)


def _fmt(v: Optional[ExtValue]) -> str:
    return "undefined" if v is None else format_extended(v)
