import pytest
from hypothesis import given
from hypothesis import strategies as st

from modtensor import alcoves as al
from modtensor.alcoves import AffineReflection as R
from modtensor.rootdata import get_datum, is_dominant

from oracles import brute_dot_reflect, levels_by_inequalities

A2, B2 = get_datum("A2"), get_datum("B2")
PRIMES = [2, 3, 5, 7, 11, 13]
weights = st.tuples(st.integers(-30, 60), st.integers(-30, 60))


def test_dot_reflect_examples():
    assert al.dot_reflect(A2, 5, R(2, 1), (2, 2)) == (1, 1)
    assert al.dot_reflect(B2, 5, R(2, 1), (0, 0)) == (2, 0)
    # (3,0) sits on H_{alpha_h,1} at p=5
    assert al.dot_reflect(A2, 5, R(2, 1), (3, 0)) == (3, 0)


@pytest.mark.parametrize("datum", [A2, B2], ids=["A2", "B2"])
@given(x=weights, p=st.sampled_from(PRIMES), level=st.integers(-2, 3))
def test_dot_reflect_matches_matrix_oracle(datum, x, p, level):
    for root in range(len(datum.positive_roots)):
        s = R(root, level)
        y = al.dot_reflect(datum, p, s, x)
        assert y == brute_dot_reflect(datum, p, root, level, x)
        assert al.dot_reflect(datum, p, s, y) == x


def test_upper_closure_examples():
    assert al.upper_closure_alcove(A2, 5, (1, 1)).levels == (0, 0, 0)
    assert al.upper_closure_alcove(A2, 5, (3, 0)).levels == (0, 0, 0)
    assert al.alcove_name(B2, al.upper_closure_alcove(B2, 5, (4, 0))) == "C3"
    assert al.is_p_regular(A2, 5, (1, 1))
    assert not al.is_p_regular(A2, 5, (3, 0))
    assert not al.is_p_regular(B2, 3, (2, 0))


@pytest.mark.parametrize("datum", [A2, B2], ids=["A2", "B2"])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_every_weight_in_exactly_one_upper_closure(datum, p):
    names = al.named_alcoves(datum.id)
    box = [(a, b) for a in range(-3, 2 * p) for b in range(-3, 2 * p)]
    for x in box:
        home = al.upper_closure_alcove(datum, p, x)
        assert al.in_upper_closure(datum, p, home, x)
        assert al.in_closure(datum, p, home, x)
        hits = [c for c in names.values() if al.in_upper_closure(datum, p, c, x)]
        assert len(hits) <= 1
        if hits:
            assert hits[0] == home
        levels = levels_by_inequalities(datum, p, x)
        if levels is None:
            assert not al.is_p_regular(datum, p, x)
            assert al.alcove_of(datum, p, x) is None
        else:
            assert al.alcove_of(datum, p, x).levels == levels == home.levels


def test_named_alcoves_match_inequalities():
    # A2 at p=11: C0 is a+b < p-2, C1 is the rest of the restricted triangle below the walls a,b < p-1
    p = 11
    c = al.named_alcoves(A2.id)
    assert all(a + b < p - 2 for a, b in al.dominant_in(A2, p, c["C0"]))
    assert all(a + b > p - 2 and a < p - 1 and b < p - 1 for a, b in al.dominant_in(A2, p, c["C1"]))
    c = al.named_alcoves(B2.id)
    assert all(2 * a + b < p - 3 for a, b in al.dominant_in(B2, p, c["C0"]))
    assert all(2 * a + b > p - 3 and a + b < p - 2 for a, b in al.dominant_in(B2, p, c["C1"]))
    assert all(a + b > p - 2 and 2 * a + b < 2 * p - 3 for a, b in al.dominant_in(B2, p, c["C2"]))
    assert all(2 * a + b > 2 * p - 3 and a < p - 1 for a, b in al.dominant_in(B2, p, c["C3"]))


def test_alcove_validation():
    with pytest.raises(ValueError):
        al.Alcove(A2.id, (0, 0, 2))
    with pytest.raises(ValueError):
        al.Alcove(B2.id, (0, 0, 0))
    assert al.fundamental_alcove(B2).levels == (0, 0, 0, 0)


@pytest.mark.parametrize("datum", [A2, B2], ids=["A2", "B2"])
def test_alcove_words_and_lengths(datum):
    for name, word in al.ALCOVE_WORDS[datum.id].items():
        alcove = al.named_alcoves(datum.id)[name]
        assert al.length(alcove) == len(word)
        assert al.alcove_name(datum, alcove) == name


def test_wall_examples():
    c = al.named_alcoves(A2.id)
    assert al.walls(A2, 5, c["C0"]) == [(R(0, 0), "lower"), (R(1, 0), "lower"), (R(2, 1), "upper")]
    assert {s for s, pos in al.walls(A2, 5, c["C1"]) if pos == "upper"} == {R(0, 1), R(1, 1)}
    c = al.named_alcoves(B2.id)
    assert {s for s, pos in al.walls(B2, 5, c["C2"]) if pos == "upper"} == {R(1, 1), R(2, 2)}
    assert al.lower_walls(B2, 5, c["C2"]) == [R(3, 1)]
    assert al.wall_between(B2, c["C1"], c["C2"]) == R(3, 1)
    assert al.wall_between(B2, c["C0"], c["C2"]) is None


@pytest.mark.parametrize("datum", [A2, B2], ids=["A2", "B2"])
def test_walls_reflect_to_neighbours(datum):
    for alcove in al.named_alcoves(datum.id).values():
        ws = al.walls(datum, 7, alcove)
        assert len(ws) == 3
        for s, pos in ws:
            other = al.reflect_alcove(datum, s, alcove)
            assert al.separating_count(alcove, other) == 1
            assert al.wall_between(datum, alcove, other) == s
            if min(other.levels) >= 0:
                assert (al.length(other) > al.length(alcove)) == (pos == "upper")


def test_reflection_small_examples():
    assert al.reflection_small(A2, 7, (1, 1), (1, 1))
    assert al.reflection_small(B2, 5, (2, 0), (1, 0))
    assert not al.reflection_small(B2, 5, (3, 0), (1, 0))
    assert not al.reflection_small(A2, 7, (2, 2), (2, 0))
    assert al.reflection_small(A2, 7, (2, 1), (2, 0))
    for datum in (A2, B2):
        for lam in [(1, 0), (0, 1), (2, 1)]:
            assert al.reflection_small(datum, 7, lam, (0, 0))


@pytest.mark.parametrize("datum", [A2, B2], ids=["A2", "B2"])
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_reflection_small_closed_form_agrees(datum, p):
    for lam in al.restricted_weights(p):
        for mu in al.restricted_weights(p):
            closed = al.reflection_small_closed_form(datum, p, lam, mu)
            if closed is not None:
                assert closed == al.reflection_small(datum, p, lam, mu), (lam, mu)


@pytest.mark.parametrize("datum", [A2, B2], ids=["A2", "B2"])
def test_wc_groups(datum):
    p = 7
    sizes = {"A2": {"C0": 6, "C1": 2}, "B2": {"C0": 8, "C1": 4, "C2": 2, "C3": 2}}[datum.name]
    for name, alcove in al.named_alcoves(datum.id).items():
        group = al.wc_elements(datum, p, alcove)
        if name in sizes:
            assert len(group) == sizes[name]
        keys = {(g.matrix, g.translation) for g in group}
        for g in group:
            for h in group:
                k = g.compose(h, datum)
                assert (k.matrix, k.translation) in keys
        # regular weights of the alcove have trivial stabilizer
        x = al.dominant_in(datum, p, alcove)[0] if al.dominant_in(datum, p, alcove) else None
        if x is not None:
            assert len({g.act(p, x) for g in group}) == len(group)
            assert sum(g.sign for g in group) == 0


def test_fold_examples():
    c0 = al.fundamental_alcove(A2)
    assert al.fold_to_closure(A2, 5, c0, (2, 2)) == ((1, 1), -1, [R(2, 1)])
    assert al.fold_to_closure(A2, 5, c0, (1, 0)) == ((1, 0), 1, [])
    assert al.dominant_fold(A2, 5, (2, 2)) == ((1, 1), -1, 1)
    assert al.dominant_fold(A2, 5, (1, 1)) == ((1, 1), 1, 0)
    assert al.dominant_fold(B2, 5, (3, 2)) == ((0, 0), -1, 3)
    assert al.dominant_fold(B2, 5, (3, 3)) == ((0, 1), -1, 3)
    y, sign, path = al.fold_to_closure(B2, 5, al.fundamental_alcove(B2), (4, 0))
    assert al.in_closure(B2, 5, al.fundamental_alcove(B2), y)
    assert sign == (-1) ** len(path)
    assert al.dominant_fold(B2, 5, (4, 0))[2] is None


@pytest.mark.parametrize("datum", [A2, B2], ids=["A2", "B2"])
@given(x=weights, p=st.sampled_from([3, 5, 7, 11]))
def test_fold_is_a_canonical_representative(datum, p, x):
    c0 = al.fundamental_alcove(datum)
    y, sign, path = al.fold_to_closure(datum, p, c0, x)
    assert al.in_closure(datum, p, c0, y)
    back = y
    for s in reversed(path):
        back = al.dot_reflect(datum, p, s, back)
    assert back == x
    # folding from any point of the same orbit lands on the same representative
    for s in al.simple_affine_reflections(datum).values():
        z = al.dot_reflect(datum, p, s, x)
        y2, sign2, _ = al.fold_to_closure(datum, p, c0, z)
        assert y2 == y
        if al.is_p_regular(datum, p, x):
            assert sign2 == -sign


@given(x=st.tuples(st.integers(0, 40), st.integers(0, 40)), p=st.sampled_from([5, 7, 11]))
def test_dominant_fold_length_counts_walls(x, p):
    for datum in (A2, B2):
        y, sign, n = al.dominant_fold(datum, p, x)
        if n is not None:
            assert sign == (-1) ** n
            assert n == al.separating_count(al.fundamental_alcove(datum), al.alcove_of(datum, p, x))


def test_omega():
    assert al.omega_dot_b2(5, (0, 0)) == (0, 1)
    assert al.omega_dot_b2(7, (1, 1)) == (1, 0)
    with pytest.raises(NotImplementedError):
        al.omega_dot_b2(5, (0, 0), A2)
    for p in (5, 7, 11):
        c0 = al.fundamental_alcove(B2)
        for lam in al.dominant_in(B2, p, c0):
            w = al.omega_dot_b2(p, lam)
            assert al.omega_dot_b2(p, w) == lam
            assert is_dominant(w) and al.in_alcove(B2, p, c0, w)


def test_restricted_weights():
    assert len(al.restricted_weights(5)) == 25
    assert al.restricted_weights(2) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_apply_word():
    assert al.apply_word(A2, 5, "s", (1, 1)) == (2, 2)
    assert al.apply_word(A2, 5, "", (1, 1)) == (1, 1)
    assert al.apply_word(B2, 5, "stu", (0, 0)) == (3, 2)
