from fractions import Fraction as F
from random import Random

import pytest

from locint.bridge import (
    ClassicalSimpleFunction,
    FiniteMeasurableSpace,
    bridge_check,
    classical_add,
    classical_integral,
    classical_mul,
    classical_scale,
    extend_measure,
    from_localic,
    to_localic,
)
from locint.errors import MalformedDocument, NotIntegrable
from locint.integrate import INTEGRABLE_NOT_SUMMABLE, SUMMABLE
from locint.rationals import NEG_INF, POS_INF
from locint.simple import sf_add, sf_mul, sf_scale, to_cut_function


@pytest.fixture(scope="module")
def space_xy():
    return FiniteMeasurableSpace.powerset(["x", "y"], {"x": F(2), "y": F(3)})


def test_classical_integral_examples(space_xy):
    f = ClassicalSimpleFunction(space_xy, {"x": F(2), "y": F(3)})
    value, report = classical_integral(f)
    assert value == 13 and report.classification == SUMMABLE
    assert classical_integral(ClassicalSimpleFunction(space_xy, {"x": F(0), "y": F(0)}))[0] == 0
    assert classical_integral(f, frozenset())[0] == 0
    assert classical_integral(f, frozenset(["x"]))[0] == 4


def test_not_integrable_classically():
    sp = FiniteMeasurableSpace.powerset(["x", "y"], {"x": POS_INF, "y": POS_INF})
    f = ClassicalSimpleFunction(sp, {"x": F(1), "y": F(-1)})
    with pytest.raises(NotIntegrable):
        classical_integral(f)


def test_to_localic_terms_and_preimage_table(space_xy):
    f = ClassicalSimpleFunction(space_xy, {"x": F(2), "y": F(3)})
    g = to_localic(f)
    cut = to_cut_function(g)
    frame = space_xy.lattice().congruence_frame()
    # f(-,q) must be nabla of the strict sublevel set, at every grid rational
    for q in (F(0), F(2), F(5, 2), F(3), F(7, 2), F(100)):
        expected = frame.nabla_of(space_xy.name_of(f.preimage_below(q))).partition_name()
        assert cut.lower_at(q) == expected
    for p in (F(-1), F(2), F(5, 2), F(3), F(100)):
        expected = frame.nabla_of(space_xy.name_of(f.preimage_above(p))).partition_name()
        assert cut.upper_at(p) == expected


def test_to_localic_of_constants_and_indicators(space_xy):
    from locint.simple import characteristic_simple, constant_simple
    facade = space_xy.lattice().congruence_frame().as_lattice()
    const = ClassicalSimpleFunction(space_xy, {"x": F(7), "y": F(7)})
    assert to_localic(const) == constant_simple(F(7), facade)
    frame = space_xy.lattice().congruence_frame()
    indicator = ClassicalSimpleFunction(space_xy, {"x": F(1), "y": F(0)})
    assert to_localic(indicator) == characteristic_simple(
        frame.nabla_of("x").partition_name(), facade)


def test_round_trip_bijection(space_xy):
    rng = Random(3)
    for _ in range(50):
        f = ClassicalSimpleFunction(
            space_xy, {p: F(rng.randint(-6, 6), rng.choice((1, 2, 3)))
                       for p in space_xy.points})
        assert from_localic(to_localic(f), space_xy) == f
    # and back: canonical simple functions with closed-congruence terms
    from locint.corpus import random_simple
    frame = space_xy.lattice().congruence_frame()
    facade = frame.as_lattice()
    for _ in range(50):
        g = random_simple(rng, facade, coeff_lo=-6, coeff_hi=6)
        assert to_localic(from_localic(g, space_xy)) == g


def test_to_localic_is_a_ring_homomorphism(space_xy):
    rng = Random(4)
    for _ in range(40):
        f = ClassicalSimpleFunction(
            space_xy, {p: F(rng.randint(-5, 5), rng.choice((1, 2)))
                       for p in space_xy.points})
        g = ClassicalSimpleFunction(
            space_xy, {p: F(rng.randint(-5, 5), rng.choice((1, 2)))
                       for p in space_xy.points})
        lam = F(rng.randint(-3, 3), rng.choice((1, 2)))
        assert to_localic(classical_add(f, g)) == sf_add(to_localic(f), to_localic(g))
        assert to_localic(classical_mul(f, g)) == sf_mul(to_localic(f), to_localic(g))
        assert to_localic(classical_scale(lam, f)) == sf_scale(lam, to_localic(f))


def test_extend_measure_examples(space_xy):
    mu = extend_measure(space_xy)
    view = space_xy.view()
    assert mu.value(view.resolve_ref("open:x")) == 2
    assert mu.value(view.resolve_ref("open:y")) == 3
    assert mu.value(view.top) == 5
    assert mu.value(view.bottom) == 0


def test_extend_measure_zero_and_infinite():
    sp0 = FiniteMeasurableSpace.powerset(["x", "y"], {"x": F(0), "y": F(0)})
    assert all(v == 0 for _, v in extend_measure(sp0).items())
    spi = FiniteMeasurableSpace.powerset(["x", "y"], {"x": POS_INF, "y": F(3)})
    mu = extend_measure(spi)
    view = spi.view()
    assert mu.value(view.resolve_ref("open:x")) is POS_INF
    assert mu.value(view.top) is POS_INF


def test_bridge_check_examples(space_xy):
    f = ClassicalSimpleFunction(space_xy, {"x": F(2), "y": F(3)})
    report = bridge_check(space_xy, f)
    assert report.equal and report.classical_value == 13
    report = bridge_check(space_xy, f, frozenset(["x"]))
    assert report.classical_value == 4
    spi = FiniteMeasurableSpace.powerset(["x", "y"], {"x": F(2), "y": POS_INF})
    fs = ClassicalSimpleFunction(spi, {"x": F(2), "y": F(-3)})
    report = bridge_check(spi, fs)
    assert report.classical_value is NEG_INF
    assert report.classical.classification == INTEGRABLE_NOT_SUMMABLE
    assert report.localic.classification == INTEGRABLE_NOT_SUMMABLE


def test_explicit_algebra_validation():
    with pytest.raises(MalformedDocument):
        FiniteMeasurableSpace(["x", "y"],
                              [frozenset(), frozenset(["x"]), frozenset(["x", "y"])],
                              {frozenset(): F(0), frozenset(["x"]): F(1),
                               frozenset(["x", "y"]): F(1)})


def test_sub_sigma_algebra_bridge():
    # the four-element algebra {0, {x,y}, {z}, X} inside a three-point set
    pts = ["x", "y", "z"]
    sets = [frozenset(), frozenset(["x", "y"]), frozenset(["z"]), frozenset(pts)]
    sp = FiniteMeasurableSpace.from_atom_weights(
        pts, sets, {frozenset(["x", "y"]): F(5), frozenset(["z"]): F(7)})
    f = ClassicalSimpleFunction(sp, {"x": F(2), "y": F(2), "z": F(-1)})
    report = bridge_check(sp, f)
    assert report.classical_value == 10 - 7
    with pytest.raises(MalformedDocument):
        ClassicalSimpleFunction(sp, {"x": F(1), "y": F(2), "z": F(3)})
