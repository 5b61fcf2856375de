"""JSON document ingestion for the CLI.

All rationals are string-encoded ("p/q" or integers; "inf"/"-inf" where an
extended value is allowed).  Function documents come in three kinds:

* {"kind": "constant", "value": "<rational|inf|-inf>"}
* {"kind": "simple", "terms": [["<rational>", "<ref>"], ...]}
* {"kind": "cut", "breakpoints": [...], "upper": [...], "lower": [...]}

Over the plain lattice a term/ladder ref is an element name.  Over the
congruence frame a simple term names a sublocale ("L", "void", "open:a",
"closed:a" or "blocks:..."), contributing r * chi_S = r * chi(theta_S^c),
while cut ladder values name the congruences themselves via the same refs.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import List, Optional, Tuple

from .bridge import ClassicalSimpleFunction, FiniteMeasurableSpace
from .congruence import SublocaleView
from .cutfunction import CutFunction, constant
from .errors import MalformedDocument, NotFinite
from .lattice import FiniteLattice, build_lattice
from .measure import Measure, measure_from_weights, validate_measure
from .rationals import is_finite, parse_extended, parse_rational
from .simple import SimpleFunction, canonicalize, constant_simple, cut_to_simple


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise MalformedDocument(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"{path} is not valid JSON: {exc}") from exc


def load_lattice(doc) -> FiniteLattice:
    return build_lattice(doc)


def _rational(value, what: str) -> Fraction:
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedDocument(f"bad rational in {what}: {value!r}") from exc


def _extended(value, what: str):
    try:
        return parse_extended(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedDocument(f"bad extended rational in {what}: {value!r}") from exc


class LoadedFunction:
    """A function document resolved against a carrier, exposing whichever
    of the simple/cut views the caller needs."""

    def __init__(self, cut: CutFunction, simple: Optional[SimpleFunction]):
        self.cut = cut
        self.simple = simple

    def as_cut(self) -> CutFunction:
        return self.cut

    def as_simple(self) -> SimpleFunction:
        if self.simple is None:
            raise NotFinite("this function is not finite, so it is not simple")
        return self.simple


def load_function(doc, lattice: FiniteLattice,
                  view: Optional[SublocaleView] = None) -> LoadedFunction:
    """Resolve a function document over the lattice itself, or over the
    congruence frame when a sublocale view is supplied."""
    if not isinstance(doc, dict):
        raise MalformedDocument("function document must be a JSON object")
    carrier = view.frame.as_lattice() if view is not None else lattice
    kind = doc.get("kind")
    if kind == "constant":
        value = _extended(doc.get("value"), "constant")
        cut = constant(value, carrier)
        simple = constant_simple(value, carrier) if is_finite(value) else None
        return LoadedFunction(cut, simple)
    if kind == "simple":
        raw = doc.get("terms")
        if not isinstance(raw, list):
            raise MalformedDocument('"terms" must be a list of [rational, ref] pairs')
        terms: List[Tuple[Fraction, str]] = []
        for item in raw:
            if not (isinstance(item, (list, tuple)) and len(item) == 2):
                raise MalformedDocument(f"bad term: {item!r}")
            r = _rational(item[0], "term")
            terms.append((r, _resolve_term_element(item[1], carrier, view)))
        simple = canonicalize(carrier, terms)
        from .simple import to_cut_function
        return LoadedFunction(to_cut_function(simple), simple)
    if kind == "cut":
        bps = doc.get("breakpoints")
        upper = doc.get("upper")
        lower = doc.get("lower")
        if not all(isinstance(x, list) for x in (bps, upper, lower)):
            raise MalformedDocument('"breakpoints", "upper" and "lower" must be lists')
        breakpoints = [_rational(b, "breakpoints") for b in bps]
        up = [_resolve_ladder_element(e, carrier, view) for e in upper]
        lo = [_resolve_ladder_element(e, carrier, view) for e in lower]
        cut = CutFunction(carrier, breakpoints, up, lo)
        simple = cut_to_simple(cut) if cut.is_finite() else None
        return LoadedFunction(cut, simple)
    raise MalformedDocument(
        f'unknown function kind {kind!r} (expected "constant", "simple" or "cut")')


def _resolve_term_element(ref, carrier: FiniteLattice,
                          view: Optional[SublocaleView]) -> str:
    """A simple-function term names an element of the carrier, or, over the
    congruence frame, the sublocale S it is the characteristic of; the term
    element is then theta_S^c."""
    if view is None:
        if not isinstance(ref, str):
            raise MalformedDocument(f"bad element reference: {ref!r}")
        carrier.index(ref)
        return ref
    theta = view.resolve_ref(ref)
    comp = view.frame.complement_or_none(theta)
    if comp is None:
        from .errors import NotComplemented
        raise NotComplemented(
            f"sublocale {view.ref_name(theta)} is not complemented in S(L)")
    return comp.partition_name()


def _resolve_ladder_element(ref, carrier: FiniteLattice,
                            view: Optional[SublocaleView]) -> str:
    if view is None:
        if not isinstance(ref, str):
            raise MalformedDocument(f"bad element reference: {ref!r}")
        carrier.index(ref)
        return ref
    return view.resolve_ref(ref).partition_name()


def load_measure(doc, view: SublocaleView) -> Measure:
    if not isinstance(doc, dict):
        raise MalformedDocument("measure document must be a JSON object")
    if "on_open_weights" in doc:
        raw = doc["on_open_weights"]
        if not isinstance(raw, dict):
            raise MalformedDocument('"on_open_weights" must map atoms to values')
        weights = {a: _extended(v, f"weight of {a!r}") for a, v in raw.items()}
        return measure_from_weights(view, weights)
    if "values" in doc:
        raw = doc["values"]
        if not isinstance(raw, dict):
            raise MalformedDocument('"values" must map sublocale refs to values')
        values = {}
        for ref, v in raw.items():
            sub = view.resolve_ref(ref)
            if sub in values:
                raise MalformedDocument(f"two values resolve to the same sublocale ({ref!r})")
            values[sub] = _extended(v, f"value of {ref!r}")
        return validate_measure(view, values)
    raise MalformedDocument('measure document needs "values" or "on_open_weights"')


def load_space(doc) -> FiniteMeasurableSpace:
    if not isinstance(doc, dict):
        raise MalformedDocument("space document must be a JSON object")
    points = doc.get("points")
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise MalformedDocument('"points" must be a list of strings')
    algebra = doc.get("algebra", "powerset")
    raw_lam = doc.get("lambda")
    if not isinstance(raw_lam, dict):
        raise MalformedDocument('"lambda" must map atoms to values')
    if algebra == "powerset":
        weights = {p: _extended(v, f"lambda[{p!r}]") for p, v in raw_lam.items()}
        missing = [p for p in points if p not in weights]
        if missing:
            raise MalformedDocument(f"no weight for point(s) {missing!r}")
        return FiniteMeasurableSpace.powerset(points, weights)
    if isinstance(algebra, list):
        sets = []
        for s in algebra:
            if not isinstance(s, list):
                raise MalformedDocument(f"bad subset in algebra: {s!r}")
            sets.append(frozenset(s))
        universe = frozenset(points)
        sets = set(sets) | {frozenset(), universe}
        from .bridge import _atoms_of
        atoms = _atoms_of(sets)
        from .lattice import subset_name
        atom_weights = {}
        for a in atoms:
            key = subset_name(a, points)
            if key not in raw_lam:
                raise MalformedDocument(f"no weight for atom {key!r}")
            atom_weights[a] = _extended(raw_lam[key], f"lambda[{key!r}]")
        return FiniteMeasurableSpace.from_atom_weights(points, sets, atom_weights)
    raise MalformedDocument('"algebra" must be "powerset" or a list of subsets')


def load_classical_function(doc, space: FiniteMeasurableSpace) -> ClassicalSimpleFunction:
    if not isinstance(doc, dict) or doc.get("kind") != "classical":
        raise MalformedDocument('a classical function document has kind "classical"')
    raw = doc.get("values")
    if not isinstance(raw, dict):
        raise MalformedDocument('"values" must map points to rationals')
    values = {p: _rational(v, f"value at {p!r}") for p, v in raw.items()}
    return ClassicalSimpleFunction(space, values)
