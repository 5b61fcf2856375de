"""The pointfree integral of simple functions against a measure on S(L).

A simple function over the congruence frame has canonical terms
r_i * chi(theta_i) where each term element theta_i is the complement of
the congruence of a sublocale S_i; its integral over a sublocale S is
sum_i r_i * mu(S_i /\\ S) with the 0 * inf = 0 convention.  The signed case
goes through the positive/negative parts: it is integrable when at least
one part has finite integral, summable when both do.  The same code path
serves nonnegative functions (whose negative part is zero), so agreement
of the two definitions is a testable fact rather than an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .congruence import Congruence, SublocaleView
from .cutfunction import CutFunction, constant, join_meet, negate
from .errors import (
    CarrierMismatch,
    ConsistencyError,
    NotComplemented,
    NotIntegrable,
    NotNonnegative,
)
from .measure import Measure, validate_measure
from .rationals import (
    ExtValue,
    POS_INF,
    ext_add,
    ext_le,
    ext_scale,
    ext_sub,
    format_extended,
    is_finite,
)
from .simple import (
    SimpleFunction,
    canonicalize,
    negative_part,
    positive_part,
    sf_mul,
    to_cut_function,
)

SUMMABLE = "summable"
INTEGRABLE_NOT_SUMMABLE = "integrable-not-summable"
NOT_INTEGRABLE = "not-integrable"


@dataclass(frozen=True)
class SummabilityReport:
    """Integrals of the two parts and the resulting classification."""

    positive_part: ExtValue
    negative_part: ExtValue
    classification: str


@dataclass(frozen=True)
class RestrictionWitness:
    """Both sides of the restriction-versus-product identity."""

    restricted: ExtValue
    multiplied: ExtValue

    @property
    def equal(self) -> bool:
        return self.restricted == self.multiplied


def classify(pos: ExtValue, neg: ExtValue) -> SummabilityReport:
    if is_finite(pos) and is_finite(neg):
        return SummabilityReport(pos, neg, SUMMABLE)
    if is_finite(pos) or is_finite(neg):
        return SummabilityReport(pos, neg, INTEGRABLE_NOT_SUMMABLE)
    return SummabilityReport(pos, neg, NOT_INTEGRABLE)


def report_value(report: SummabilityReport) -> ExtValue:
    if report.classification == NOT_INTEGRABLE:
        raise NotIntegrable(
            "both parts have infinite integral; the value is undefined")
    return ext_sub(report.positive_part, report.negative_part)


def _check_carriers(g: SimpleFunction, measure: Measure) -> None:
    facade = measure.view.frame.as_lattice()
    if g.carrier is not facade and g.carrier != facade:
        raise CarrierMismatch(
            "the simple function does not live on the measure's congruence frame")


def sublocale_of_term(view: SublocaleView, element: str) -> Congruence:
    """The S with theta_S^c equal to the given congruence-frame element."""
    frame = view.frame
    theta_c = frame.congruence_of_element(element)
    comp = frame.complement_or_none(theta_c)
    if comp is None:
        raise NotComplemented(
            f"term element {element!r} is not complemented in C(L)")
    return comp


def _nonneg_sum(g: SimpleFunction, measure: Measure, over: Congruence) -> ExtValue:
    """sum_i r_i mu(S_i /\\ S) for canonical nonnegative g (0 * inf = 0)."""
    view = measure.view
    total: ExtValue = Fraction(0)
    for r, element in g.terms:
        s_i = sublocale_of_term(view, element)
        total = ext_add(total, ext_scale(r, measure.value(view.meet(s_i, over))))
    return total


def summability(g: SimpleFunction, measure: Measure,
                over: Optional[Congruence] = None) -> SummabilityReport:
    """Part-wise integrals and classification; never raises for defined input."""
    _check_carriers(g, measure)
    if over is None:
        over = measure.view.top
    pos = _nonneg_sum(positive_part(g), measure, over)
    neg = _nonneg_sum(negative_part(g), measure, over)
    return classify(pos, neg)


def integrate_simple(g: SimpleFunction, measure: Measure,
                     over: Optional[Congruence] = None) -> Tuple[ExtValue, SummabilityReport]:
    """The integral of g over a sublocale, via positive/negative parts."""
    report = summability(g, measure, over)
    return report_value(report), report


def integral_of_representation(view: SublocaleView,
                               terms: List[Tuple[Fraction, str]],
                               measure: Measure,
                               over: Optional[Congruence] = None) -> ExtValue:
    """Direct sum over any pairwise-disjoint representation; must agree with
    the canonical value for integrable functions."""
    if over is None:
        over = measure.view.top
    lat = view.frame.as_lattice()
    for i, (_, a) in enumerate(terms):
        for _, b in terms[i + 1:]:
            if lat.meet(a, b) != lat.bottom:
                raise ConsistencyError(
                    f"representation terms {a!r}, {b!r} are not disjoint")
    pos: ExtValue = Fraction(0)
    neg: ExtValue = Fraction(0)
    for r, element in terms:
        r = Fraction(r)
        s_i = sublocale_of_term(view, element)
        contribution = ext_scale(abs(r), measure.value(view.meet(s_i, over)))
        if r >= 0:
            pos = ext_add(pos, contribution)
        else:
            neg = ext_add(neg, contribution)
    return report_value(classify(pos, neg))


def characteristic_of_sublocale(view: SublocaleView, s: Congruence) -> SimpleFunction:
    """chi_S = chi(theta_S^c) as a simple function over C(L)."""
    frame = view.frame
    comp = frame.complement_or_none(s)
    if comp is None:
        raise NotComplemented(
            f"sublocale {view.ref_name(s)} is not complemented in S(L)")
    return canonicalize(frame.as_lattice(), ((Fraction(1), comp.partition_name()),))


def restrict_vs_multiply(g: SimpleFunction, measure: Measure,
                         s: Congruence) -> RestrictionWitness:
    """Integral over a complemented S versus the integral of g * chi_S;
    the two sides are computed independently and must agree exactly."""
    chi_s = characteristic_of_sublocale(measure.view, s)
    left, _ = integrate_simple(g, measure, s)
    right, _ = integrate_simple(sf_mul(g, chi_s), measure, None)
    witness = RestrictionWitness(left, right)
    if not witness.equal:
        raise ConsistencyError(
            f"restriction {format_extended(left)} != product {format_extended(right)}")
    return witness


def indefinite_integral(g: SimpleFunction, measure: Measure) -> Measure:
    """S |-> integral of g over S; a measure on S(L) for nonnegative g."""
    if not g.is_nonnegative():
        raise NotNonnegative("the indefinite integral needs a nonnegative function")
    _check_carriers(g, measure)
    view = measure.view
    values = {s: _nonneg_sum(g, measure, s) for s in view.sublocales}
    return validate_measure(view, values)


def nonnegativity_certificate(g: SimpleFunction, measure: Measure,
                              s: Congruence) -> bool:
    """Check theta_S^c /\\ g(-,0) = 0; when it holds the integral over S is
    asserted to be nonnegative and True is returned."""
    _check_carriers(g, measure)
    frame = measure.view.frame
    comp = frame.complement_or_none(s)
    if comp is None:
        raise NotComplemented(
            f"sublocale {measure.view.ref_name(s)} is not complemented in S(L)")
    facade = frame.as_lattice()
    side = facade.meet(comp.partition_name(),
                       to_cut_function(g).lower_at(Fraction(0)))
    if side != facade.bottom:
        return False
    value, _ = integrate_simple(g, measure, s)
    if not ext_le(Fraction(0), value):
        raise ConsistencyError(
            f"certificate held but the integral is {format_extended(value)}")
    return True


# -- the general integral ------------------------------------------------------------


def _nonneg_general(f: CutFunction, measure: Measure, over: Congruence) -> ExtValue:
    """Supremum of integrals of simple minorants of a nonnegative f.

    The integrand is a rational step function, so the supremum is attained
    by its own lower staircase: each finite-level cell upper[j] /\\
    lower[j+1] contributes breakpoint * measure, and the region where the
    upper ladder never drops to bottom contributes +inf exactly when it
    meets `over` in positive measure (minorants put arbitrarily large
    constants there)."""
    view = measure.view
    lat = f.carrier
    total: ExtValue = Fraction(0)
    for j, r in enumerate(f.breakpoints):
        cell = lat.meet(f.upper[j], f.lower[j + 1])
        if cell == lat.bottom:
            continue
        s_cell = sublocale_of_term(view, cell)
        total = ext_add(total, ext_scale(r, measure.value(view.meet(s_cell, over))))
    inf_region = f.upper[-1]
    if inf_region != lat.bottom:
        s_inf = sublocale_of_term(view, inf_region)
        if measure.value(view.meet(s_inf, over)) != Fraction(0):
            total = POS_INF
    return total


def integrate_general(f: CutFunction, measure: Measure,
                      over: Optional[Congruence] = None) -> ExtValue:
    """Integral of an arbitrary (possibly extended) function over C(L),
    defined through the parts f+ = f \\/ 0 and f- = (-f) \\/ 0."""
    facade = measure.view.frame.as_lattice()
    if f.carrier is not facade and f.carrier != facade:
        raise CarrierMismatch(
            "the function does not live on the measure's congruence frame")
    if over is None:
        over = measure.view.top
    zero_fn = constant(Fraction(0), f.carrier)
    f_plus = join_meet(f, zero_fn)[0]
    f_minus = join_meet(negate(f), zero_fn)[0]
    pos = _nonneg_general(f_plus, measure, over)
    neg = _nonneg_general(f_minus, measure, over)
    return report_value(classify(pos, neg))
