"""Executable classification tables for complete reducibility (CR) and
multiplicity freeness (MF) of L(lam) (x) L(mu), SL3 (A2) and Sp4 (B2).

Each row is a predicate on an ordered restricted pair (lam, mu).  Tables are
symmetric, so every row is tried on (lam, mu) and on (mu, lam).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import alcoves as al
from .rootdata import RootDatum, RootSystemId, Weight, get_datum
from .simples import is_restricted
from .tensor import steinberg_digit_pairs

Row = Callable[[int, Weight, Weight], bool]

A2 = get_datum("A2")
B2 = get_datum("B2")


def _in(datum: RootDatum, p: int, lam: Weight, *names: str) -> bool:
    """Is lam in one of the named open alcoves?"""
    return al.alcove_name(datum, al.alcove_of(datum, p, lam)) in names


def _rs(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> bool:
    return al.reflection_small(datum, p, lam, mu)


def _swap(x: Weight) -> Weight:
    return (x[1], x[0])


def _dual(row: Row) -> Row:
    return lambda p, lam, mu: row(p, _swap(lam), _swap(mu))


# -- A2 -------------------------------------------------------------------------------


def _a2_row1(p, lam, mu):
    return lam[1] == 0 and mu[1] == 0 and lam[0] + mu[0] == p - 1


def _a2_row2(p, lam, mu):
    return lam == (p - 1, 0) and mu == (0, 1)


def _a2_row3(p, lam, mu):
    a, b = lam
    return _in(A2, p, lam, "C1") and a + b == p - 1 and b < a and mu == (0, b + 1)


def _a2_cr_row4(p, lam, mu):
    return _in(A2, p, lam, "C0", "C1") and _rs(A2, p, lam, mu)


def _a2_mf_row4a(p, lam, mu):
    return _in(A2, p, lam, "C0", "C1") and mu[1] == 0 and _rs(A2, p, lam, mu)


def _a2_mf_row4b(p, lam, mu):
    return _in(A2, p, lam, "C1") and sum(lam) == p - 1 and _rs(A2, p, lam, mu)


A2_CR_ROWS: list[tuple[str, Row]] = [
    ("1", _a2_row1),
    ("1*", _dual(_a2_row1)),
    ("2", _a2_row2),
    ("2*", _dual(_a2_row2)),
    ("3", _a2_row3),
    ("3*", _dual(_a2_row3)),
    ("4", _a2_cr_row4),
]

A2_MF_ROWS: list[tuple[str, Row]] = [
    ("1", _a2_row1),
    ("1*", _dual(_a2_row1)),
    ("2", _a2_row2),
    ("2*", _dual(_a2_row2)),
    ("3", _a2_row3),
    ("3*", _dual(_a2_row3)),
    ("4a", _a2_mf_row4a),
    ("4a*", _dual(_a2_mf_row4a)),
    ("4b", _a2_mf_row4b),
]


# -- B2 -------------------------------------------------------------------------------


def _b2_row1(p, lam, mu):
    if p < 3:
        return False
    pair = {((p - 1) // 2, 0), ((p - 3) // 2, 1)}
    return lam in pair and mu in pair


def _b2_fixed(cond: Callable[[int], bool], lam_of, mu_of) -> Row:
    return lambda p, lam, mu: cond(p) and lam == lam_of(p) and mu == mu_of(p)


_b2_row2 = _b2_fixed(lambda p: True, lambda p: (p - 1, 0), lambda p: (0, 1))
_b2_row3 = _b2_fixed(lambda p: True, lambda p: (0, p - 1), lambda p: (1, 0))
_b2_row4 = _b2_fixed(lambda p: p != 3, lambda p: (p - 2, 1), lambda p: (1, 0))
_b2_row5 = _b2_fixed(lambda p: p >= 3, lambda p: (0, p - 2), lambda p: (0, 1))
_b2_row6 = _b2_fixed(lambda p: p >= 3, lambda p: (p - 2, 0), lambda p: (0, 1))
_b2_row7 = _b2_fixed(lambda p: p >= 5, lambda p: (0, p - 3), lambda p: (1, 0))


def _b2_cr_row8(p, lam, mu):
    return _in(B2, p, lam, "C0", "C1", "C2", "C3") and _rs(B2, p, lam, mu)


def _rs_row(alcoves: tuple[str, ...], lam_cond, mu_cond) -> Row:
    def row(p, lam, mu):
        return (
            _in(B2, p, lam, *alcoves)
            and lam_cond(p, *lam)
            and mu_cond(*mu)
            and _rs(B2, p, lam, mu)
        )

    return row


def _any(*args):
    return True


def _b2_mf_row8a(p, lam, mu):
    return _in(B2, p, lam, "C0") and _rs(B2, p, lam, mu) and stembridge_b2_char0_mf(lam, mu) is not None


def _b2_mf_row8f(p, lam, mu):
    return p >= 3 and lam == ((p - 1) // 2, 0) and _rs(B2, p, lam, mu)


def _b2_mf_row8f_omega(p, lam, mu):
    return p >= 3 and lam == ((p - 3) // 2, 1) and _rs(B2, p, lam, mu)


B2_CR_ROWS: list[tuple[str, Row]] = [
    ("1", _b2_row1),
    ("2", _b2_row2),
    ("3", _b2_row3),
    ("4", _b2_row4),
    ("5", _b2_row5),
    ("6", _b2_row6),
    ("7", _b2_row7),
    ("8", _b2_cr_row8),
]

B2_MF_ROWS: list[tuple[str, Row]] = B2_CR_ROWS[:7] + [
    ("8a", _b2_mf_row8a),
    ("8b", _rs_row(("C1", "C2", "C3"), _any, lambda a, b: (a, b) in ((1, 0), (0, 1)))),
    ("8c", _rs_row(("C1",), lambda p, a, b: b == 1, lambda a, b: b == 0)),
    ("8c^w", _rs_row(("C1",), lambda p, a, b: 2 * a + b == p - 1, lambda a, b: b == 0)),
    ("8d", _rs_row(("C1",), lambda p, a, b: b == 0, lambda a, b: b in (0, 1))),
    ("8d^w", _rs_row(("C1",), lambda p, a, b: 2 * a + b == p - 2, lambda a, b: b in (0, 1))),
    ("8e", _rs_row(("C1",), lambda p, a, b: b == 0, lambda a, b: a == 0)),
    ("8e^w", _rs_row(("C1",), lambda p, a, b: 2 * a + b == p - 2, lambda a, b: a == 0)),
    ("8f", _b2_mf_row8f),
    ("8f^w", _b2_mf_row8f_omega),
    ("8g", _rs_row(("C2",), lambda p, a, b: a + b == p - 1, lambda a, b: b == 0)),
    ("8h", _rs_row(("C2",), lambda p, a, b: a + b == p - 1, lambda a, b: a == 0)),
    ("8i", _rs_row(("C3",), lambda p, a, b: 2 * a + b == 2 * p - 2, lambda a, b: a == 0)),
    ("8j", _rs_row(("C3",), lambda p, a, b: 2 * a + b == 2 * p - 2, lambda a, b: b in (0, 1))),
    ("8k", _rs_row(("C3",), lambda p, a, b: 2 * a + b == 2 * p - 1, lambda a, b: b == 0)),
]


STEMBRIDGE_B2_ROWS: list[tuple[str, Callable[[Weight, Weight], bool]]] = [
    ("1a", lambda lam, mu: mu == (1, 0)),
    ("1b", lambda lam, mu: mu == (0, 1)),
    ("2a", lambda lam, mu: lam[1] == 0 and mu[1] == 0),
    ("2b", lambda lam, mu: lam[0] == 0 and mu[0] == 0),
    ("3", lambda lam, mu: lam[1] == 0 and mu[0] == 0),
    ("4", lambda lam, mu: lam[1] == 1 and mu[1] == 0),
]


def stembridge_b2_char0_mf(lam: Weight, mu: Weight) -> str | None:
    """Row of the characteristic-zero MF table for Sp4 matched by (lam, mu), if any."""
    if lam == (0, 0) or mu == (0, 0):
        raise ValueError("weights must be nonzero")
    for label, row in STEMBRIDGE_B2_ROWS:
        if row(lam, mu) or row(mu, lam):
            return label
    return None


# -- row matching -----------------------------------------------------------------------

TABLES = {
    (RootSystemId.A2, "cr"): A2_CR_ROWS,
    (RootSystemId.A2, "mf"): A2_MF_ROWS,
    (RootSystemId.B2, "cr"): B2_CR_ROWS,
    (RootSystemId.B2, "mf"): B2_MF_ROWS,
}


@dataclass(frozen=True)
class RowMatch:
    table: str
    row: str
    swapped: bool

    def label(self) -> str:
        return f"{self.table}:{self.row}{'(swap)' if self.swapped else ''}"


def _check_restricted(p: int, lam: Weight, mu: Weight) -> None:
    for x in (lam, mu):
        if not is_restricted(p, x):
            raise ValueError(f"{x} is not {p}-restricted")
        if x == (0, 0):
            raise ValueError("zero weights are handled by the caller")


def matching_rows(datum: RootDatum, kind: str, p: int, lam: Weight, mu: Weight) -> list[RowMatch]:
    _check_restricted(p, lam, mu)
    table = f"{datum.name}-{kind.upper()}"
    out = []
    for label, row in TABLES[(datum.id, kind)]:
        for swapped, (x, y) in ((False, (lam, mu)), (True, (mu, lam))):
            if row(p, x, y):
                out.append(RowMatch(table, label, swapped))
    return out


def _first(datum, kind, p, lam, mu) -> str | None:
    rows = matching_rows(datum, kind, p, lam, mu)
    return rows[0].row if rows else None


def a2_cr_row(p: int, lam: Weight, mu: Weight) -> str | None:
    return _first(A2, "cr", p, lam, mu)


def a2_mf_row(p: int, lam: Weight, mu: Weight) -> str | None:
    return _first(A2, "mf", p, lam, mu)


def b2_cr_row(p: int, lam: Weight, mu: Weight) -> str | None:
    return _first(B2, "cr", p, lam, mu)


def b2_mf_row(p: int, lam: Weight, mu: Weight) -> str | None:
    return _first(B2, "mf", p, lam, mu)


@dataclass(frozen=True)
class Verdict:
    cr: bool
    mf: bool
    matched_rows: tuple[RowMatch, ...] = field(default=())

    def to_json(self, datum: RootDatum, p: int, lam: Weight, mu: Weight) -> dict:
        return {
            "system": datum.name,
            "p": p,
            "lambda": list(lam),
            "mu": list(mu),
            "cr": self.cr,
            "mf": self.mf,
            "rows": [m.label() for m in self.matched_rows],
        }


def restricted_verdict(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> Verdict:
    if lam == (0, 0) or mu == (0, 0):
        return Verdict(True, True)
    cr = matching_rows(datum, "cr", p, lam, mu)
    mf = matching_rows(datum, "mf", p, lam, mu)
    return Verdict(bool(cr), bool(mf), tuple(cr + mf))


def verdict(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> Verdict:
    """CR/MF verdict for dominant weights via the Steinberg reduction to restricted digits."""
    cr = mf = True
    rows: list[RowMatch] = []
    for x, y in steinberg_digit_pairs(p, lam, mu):
        v = restricted_verdict(datum, p, x, y)
        cr, mf = cr and v.cr, mf and v.mf
        rows.extend(v.matched_rows)
    return Verdict(cr, mf, tuple(rows))
