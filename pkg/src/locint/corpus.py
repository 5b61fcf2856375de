"""Reference lattices and seeded random generators for the verification suite.

The corpus holds the three-element chain, the Boolean algebras on 2..4
atoms, and two non-Boolean distributive lattices (the divisor lattices of
12 and of 60, with 6 and 12 elements).  Generators draw from
``random.Random`` so a fixed seed reproduces every case exactly.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import Dict, List, Sequence, Tuple

from .congruence import SublocaleView
from .lattice import FiniteLattice, chain_lattice, lattice_from_order, powerset_lattice
from .measure import Measure, validate_measure
from .rationals import POS_INF, ExtValue, ext_add
from .simple import SimpleFunction, from_cells


def divisor_lattice(n: int) -> FiniteLattice:
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    names = [str(d) for d in divisors]
    pairs = [(str(a), str(b)) for a in divisors for b in divisors if b % a == 0]
    return lattice_from_order(names, pairs)


def corpus_lattices() -> Dict[str, FiniteLattice]:
    return {
        "c3": chain_lattice(["0", "m", "1"]),
        "b4": powerset_lattice(["x", "y"]),
        "b8": powerset_lattice(["x", "y", "z"]),
        "b16": powerset_lattice(["w", "x", "y", "z"]),
        "div12": divisor_lattice(12),
        "div60": divisor_lattice(60),
    }


def boolean_atoms(lattice: FiniteLattice) -> Tuple[str, ...]:
    """Atoms of the Boolean sublattice of complemented elements; they are
    pairwise disjoint and join to the top."""
    complemented = [a for a in lattice.complemented_elements() if a != lattice.bottom]
    atoms = []
    for a in complemented:
        if not any(b != a and lattice.leq(b, a) for b in complemented):
            atoms.append(a)
    return tuple(atoms)


def random_rational(rng: Random, lo: int = -12, hi: int = 12,
                    denominators: Sequence[int] = (1, 2, 3, 4, 6)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(denominators))


def random_weight(rng: Random, inf_probability: float = 0.0,
                  hi: int = 9) -> ExtValue:
    if inf_probability and rng.random() < inf_probability:
        return POS_INF
    return Fraction(rng.randint(0, hi * 2), rng.choice((1, 2, 3, 4)))


def random_cover(rng: Random, lattice: FiniteLattice, max_parts: int = 3) -> List[str]:
    """A pairwise-disjoint complemented cover of the top: the atoms of the
    complemented sublattice, randomly grouped and joined."""
    atoms = list(boolean_atoms(lattice))
    rng.shuffle(atoms)
    parts = rng.randint(1, min(max_parts, len(atoms)))
    groups: List[List[str]] = [[] for _ in range(parts)]
    for i, a in enumerate(atoms):
        groups[i % parts].append(a)
    return [lattice.join_all(g) for g in groups]


def random_simple(rng: Random, lattice: FiniteLattice, *,
                  nonneg: bool = False, max_parts: int = 3,
                  coeff_lo: int = -12, coeff_hi: int = 12,
                  denominators: Sequence[int] = (1, 2, 3, 4, 6)) -> SimpleFunction:
    cover = random_cover(rng, lattice, max_parts)
    lo = 0 if nonneg else coeff_lo
    cells = {}
    for part in cover:
        cells[part] = random_rational(rng, lo, coeff_hi, denominators)
    return from_cells(lattice, cells)


def random_measure(rng: Random, view: SublocaleView,
                   inf_probability: float = 0.0) -> Measure:
    """Additive measure from random weights on the atoms of S(L): the
    measure of S is the weight sum over the atoms below it.  Atoms are
    join-prime in a distributive coframe, which yields (M2) and (M3)."""
    atoms = view.atoms()
    weights = [random_weight(rng, inf_probability) for _ in atoms]
    values = {}
    for s in view.sublocales:
        total: ExtValue = Fraction(0)
        for a, w in zip(atoms, weights):
            if view.leq(a, s):
                total = ext_add(total, w)
        values[s] = total
    return validate_measure(view, values)


def random_subset(rng: Random, items: Sequence[str]) -> List[str]:
    return [x for x in items if rng.random() < 0.5]
