from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modtensor.rootdata import (
    dual_weight,
    finite_orbit,
    get_datum,
    leq,
    pair,
    reflect,
    root_coordinates,
)

SYSTEMS = ["A2", "B2"]
weights = st.tuples(st.integers(-20, 20), st.integers(-20, 20))


def test_root_lists():
    a2, b2 = get_datum("A2"), get_datum("B2")
    assert a2.positive_roots == ((2, -1), (-1, 2), (1, 1))
    assert b2.positive_roots == ((2, -2), (-1, 2), (1, 0), (0, 2))
    assert [pair(b2, (3, 5), i) for i in range(4)] == [3, 5, 11, 8]
    assert (a2.coxeter_number, b2.coxeter_number) == (3, 4)
    assert b2.minuscule_weights == ((0, 1),)


@pytest.mark.parametrize("system,order,top", [("A2", 6, 3), ("B2", 8, 4)])
def test_weyl_group(system, order, top):
    datum = get_datum(system)
    assert len(datum.finite_weyl) == order
    assert datum.longest_element.length == top
    for w in datum.finite_weyl:
        (m00, m01), (m10, m11) = w.matrix
        assert m00 * m11 - m01 * m10 == (-1) ** w.length


def test_spec_examples():
    a2, b2 = get_datum("A2"), get_datum("B2")
    assert pair(a2, (1, 1), 2) == 2
    assert pair(b2, (2, 0), 2) == 4
    assert reflect(a2, (1, 0), 0) == (-1, 1)
    assert reflect(b2, (0, 1), 1) == (1, -1)
    assert reflect(a2, (1, 1), 2) == (-1, -1)
    assert root_coordinates(a2, (1, 1)) == (1, 1)
    assert root_coordinates(b2, (1, 0)) == (1, 1)
    assert root_coordinates(b2, (0, 2)) == (1, 2)
    assert root_coordinates(b2, (0, 1)) == (Fraction(1, 2), 1)
    assert leq(a2, (0, 0), (1, 1))
    assert not leq(b2, (0, 0), (0, 1))
    assert not leq(a2, (2, 0), (0, 1))


def test_bad_root_index():
    with pytest.raises(IndexError):
        pair(get_datum("A2"), (0, 0), 3)
    with pytest.raises(ValueError):
        get_datum("G2")


def test_orbits_from_examples():
    a, b = 2, 3
    # A2 has no -1 in its Weyl group; the +- description only holds when a == b
    expected = {(a, b), (a + b, -b), (-a, a + b), (-b, -a), (-a - b, a), (b, -a - b)}
    assert {x for x, _ in finite_orbit(get_datum("A2"), (a, b))} == expected
    signed = {(a, a), (2 * a, -a), (-a, 2 * a)}
    signed |= {(-x, -y) for x, y in signed}
    assert {x for x, _ in finite_orbit(get_datum("A2"), (a, a))} == signed
    expected = {(a, b), (a + b, -b), (-a, 2 * a + b), (-a - b, 2 * a + b)}
    expected |= {(-x, -y) for x, y in expected}
    assert {x for x, _ in finite_orbit(get_datum("B2"), (a, b))} == expected
    assert finite_orbit(get_datum("B2"), (0, 0)) == [((0, 0), "")]


@pytest.mark.parametrize("system", SYSTEMS)
@given(x=weights)
def test_group_actions(system, x):
    datum = get_datum(system)
    for i in range(len(datum.positive_roots)):
        assert reflect(datum, reflect(datum, x, i), i) == x
    orbit = finite_orbit(datum, x)
    stabilizer = sum(1 for w in datum.finite_weyl if w.act(x) == x)
    assert len(orbit) * stabilizer == len(datum.finite_weyl)
    points = {y for y, _ in orbit}
    for y in points:
        assert reflect(datum, y, 0) in points and reflect(datum, y, 1) in points
    labels = {w.label: w for w in datum.finite_weyl}
    for y, label in orbit:
        assert labels[label].act(x) == y


@pytest.mark.parametrize("system", SYSTEMS)
@given(x=weights)
def test_longest_element_negates_positive_roots(system, x):
    datum = get_datum(system)
    w0x = datum.longest_element.act(x)
    assert sorted(datum.pairings(w0x)) == sorted(-v for v in datum.pairings(x))
    assert dual_weight(datum, dual_weight(datum, x)) == x


@pytest.mark.parametrize("system", SYSTEMS)
def test_leq_is_partial_order(system):
    datum = get_datum(system)
    box = [(a, b) for a in range(-3, 4) for b in range(-3, 4)]
    for x in box:
        assert leq(datum, x, x)
        for y in box:
            if x != y and leq(datum, x, y):
                assert not leq(datum, y, x)
                for z in box:
                    if leq(datum, y, z):
                        assert leq(datum, x, z)


def test_form_is_invariant():
    for datum in map(get_datum, SYSTEMS):
        for w in datum.finite_weyl:
            for x in [(1, 0), (0, 1), (2, -1)]:
                for y in [(1, 0), (0, 1), (3, 2)]:
                    assert datum.form(w.act(x), w.act(y)) == datum.form(x, y)
