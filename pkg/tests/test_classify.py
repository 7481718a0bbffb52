import pytest
from hypothesis import given
from hypothesis import strategies as st

from modtensor import alcoves as al
from modtensor.classify import (
    RowMatch,
    a2_cr_row,
    a2_mf_row,
    b2_cr_row,
    b2_mf_row,
    matching_rows,
    restricted_verdict,
    stembridge_b2_char0_mf,
    verdict,
)
from modtensor.rootdata import get_datum
from modtensor.tensor import is_multiplicity_free_oracle, klimyk_char0

A2, B2 = get_datum("A2"), get_datum("B2")


def test_a2_rows():
    assert a2_cr_row(5, (4, 0), (0, 1)) == "2"
    assert a2_mf_row(5, (4, 0), (0, 1)) == "2"
    assert a2_cr_row(5, (3, 1), (0, 2)) == "3"
    assert a2_mf_row(5, (3, 1), (0, 2)) == "3"
    assert a2_cr_row(5, (1, 1), (1, 1)) is None
    assert a2_mf_row(7, (1, 1), (1, 1)) is None
    assert a2_mf_row(7, (2, 1), (2, 0)) == "4a"
    assert a2_mf_row(7, (2, 2), (2, 0)) is None
    assert a2_mf_row(5, (0, 2), (0, 2)) == "1*"


def test_b2_rows():
    assert b2_cr_row(5, (2, 0), (1, 1)) == "1"
    assert b2_mf_row(5, (2, 0), (1, 1)) == "1"
    assert b2_cr_row(5, (4, 0), (0, 1)) == "2"
    assert b2_cr_row(3, (1, 1), (1, 0)) is None
    assert b2_mf_row(7, (1, 0), (1, 0)) == "8a"


def test_domain_errors():
    with pytest.raises(ValueError):
        a2_cr_row(5, (0, 0), (1, 0))
    with pytest.raises(ValueError):
        b2_mf_row(5, (5, 0), (1, 0))
    with pytest.raises(ValueError):
        stembridge_b2_char0_mf((0, 0), (1, 0))


def test_stembridge_examples():
    assert stembridge_b2_char0_mf((3, 0), (0, 2)) == "3"
    assert stembridge_b2_char0_mf((1, 1), (1, 1)) is None
    assert max(klimyk_char0(B2, (1, 1), (1, 1)).values()) >= 2
    for lam in [(2, 3), (0, 4), (5, 1)]:
        assert stembridge_b2_char0_mf(lam, (0, 1)) == "1b"


@given(lam=st.tuples(st.integers(0, 8), st.integers(0, 8)), mu=st.tuples(st.integers(0, 8), st.integers(0, 8)))
def test_stembridge_matches_klimyk(lam, mu):
    if lam == (0, 0) or mu == (0, 0):
        return
    mf = max(klimyk_char0(B2, lam, mu).values()) == 1
    assert (stembridge_b2_char0_mf(lam, mu) is not None) == mf
    assert (stembridge_b2_char0_mf(mu, lam) is not None) == mf


@pytest.mark.parametrize("datum", [A2, B2], ids=["A2", "B2"])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_verdict_symmetric(datum, p):
    for lam in al.restricted_weights(p):
        for mu in al.restricted_weights(p):
            v, w = restricted_verdict(datum, p, lam, mu), restricted_verdict(datum, p, mu, lam)
            assert (v.cr, v.mf) == (w.cr, w.mf)
            if datum is A2:
                d = restricted_verdict(datum, p, lam[::-1], mu[::-1])
                assert (v.cr, v.mf) == (d.cr, d.mf)


def test_matching_rows_labels():
    rows = matching_rows(A2, "mf", 5, (0, 1), (4, 0))
    assert RowMatch("A2-MF", "2", True) in rows
    assert rows[0].label().startswith("A2-MF:")
    assert RowMatch("B2-CR", "2", False).label() == "B2-CR:2"
    assert RowMatch("B2-CR", "2", True).label() == "B2-CR:2(swap)"


def test_verdict_examples():
    v = verdict(B2, 5, (4, 0), (0, 1))
    assert v.cr and v.mf
    assert {m.label() for m in v.matched_rows} == {"B2-CR:2", "B2-MF:2"}
    assert verdict(A2, 5, (0, 0), (3, 3)) == verdict(A2, 5, (0, 0), (0, 0))
    assert verdict(A2, 5, (0, 0), (3, 3)).mf
    out = verdict(A2, 5, (4, 0), (0, 1)).to_json(A2, 5, (4, 0), (0, 1))
    assert out == {"system": "A2", "p": 5, "lambda": [4, 0], "mu": [0, 1], "cr": True, "mf": True,
                   "rows": ["A2-CR:2", "A2-MF:2"]}


def test_verdict_uses_digits():
    # 6 = 1 + 5: the pair splits into (1,0)(x)(1,0) and (1,0)(x)(0,0)
    v = verdict(A2, 5, (6, 0), (1, 0))
    assert v.mf == restricted_verdict(A2, 5, (1, 0), (1, 0)).mf
    assert v.mf == is_multiplicity_free_oracle(A2, 5, (6, 0), (1, 0))
