"""Formal characters, Weyl characters and the extended chi symbol."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .rootdata import RootDatum, RootSystemId, Weight, get_datum, is_dominant, root_coordinates


def weight_key(x: Weight) -> tuple[int, int]:
    """Sort key refining the dominance order for both A2 and B2."""
    return (x[0] + x[1], x[0])


class Sparse(dict):
    """Finitely supported integer function; zero entries are never stored."""

    def __init__(self, items=()):
        super().__init__()
        for k, v in dict(items).items():
            if v:
                self[tuple(k)] = v

    def add(self, key, value: int) -> None:
        v = self.get(key, 0) + value
        if v:
            self[key] = v
        else:
            self.pop(key, None)

    def __add__(self, other):
        out = type(self)(self)
        for k, v in other.items():
            out.add(k, v)
        return out

    def __sub__(self, other):
        out = type(self)(self)
        for k, v in other.items():
            out.add(k, -v)
        return out

    def scaled(self, c: int):
        return type(self)({k: c * v for k, v in self.items()})

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self.items())

    def triples(self) -> list[list[int]]:
        return [[a, b, m] for (a, b), m in self.sorted_items()]

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.sorted_items())
        return f"{type(self).__name__}({{{body}}})"


class Character(Sparse):
    """A formal character sum_x m(x) e^x."""

    def dim(self) -> int:
        return sum(self.values())

    def __mul__(self, other: "Character") -> "Character":
        out = Character()
        for (a, b), m in self.items():
            for (c, d), n in other.items():
                out.add((a + c, b + d), m * n)
        return out

    def twisted(self, p: int, r: int = 1) -> "Character":
        q = p**r
        return Character({(q * a, q * b): m for (a, b), m in self.items()})

    @classmethod
    def exp(cls, x: Weight) -> "Character":
        return cls({x: 1})


class ChiExpansion(Sparse):
    """An element of Z[X]^W written in the Weyl-character basis {chi(lam)}."""


# -- Weyl group helpers ---------------------------------------------------------


def dominant_representative(datum: RootDatum, x: Weight) -> Weight:
    """The dominant weight in the W_fin-orbit of x (ordinary action)."""
    (r1, r2) = datum.simple_roots
    a, b = x
    while a < 0 or b < 0:
        if a < 0:
            a, b = a - a * r1[0], b - a * r1[1]
        else:
            a, b = a - b * r2[0], b - b * r2[1]
    return (a, b)


def chi_normalize(datum: RootDatum, mu: Weight) -> tuple[Weight, int] | None:
    """Rewrite chi(mu) as +-chi(nu) with nu dominant, or None when chi(mu) = 0."""
    y = (mu[0] + 1, mu[1] + 1)
    if any(q == 0 for q in datum.pairings(y)):
        return None
    (r1, r2) = datum.simple_roots
    a, b = y
    sign = 1
    while a < 0 or b < 0:
        if a < 0:
            a, b = a - a * r1[0], b - a * r1[1]
        else:
            a, b = a - b * r2[0], b - b * r2[1]
        sign = -sign
    return (a - 1, b - 1), sign


# -- Freudenthal ----------------------------------------------------------------


def _dominant_weights_below(datum: RootDatum, lam: Weight) -> list[Weight]:
    """Dominant weights mu <= lam, by increasing depth below lam."""
    r1, r2 = datum.simple_roots
    out = []
    depth = 0
    while True:
        layer = []
        for c in range(depth + 1):
            d = depth - c
            mu = (lam[0] - c * r1[0] - d * r2[0], lam[1] - c * r1[1] - d * r2[1])
            if is_dominant(mu):
                layer.append(mu)
        if not layer and depth > 2 * (lam[0] + lam[1]) + 2:
            return out
        out.extend(layer)
        depth += 1


@lru_cache(maxsize=4096)
def _dominant_multiplicities(datum: RootDatum, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    lr = (lam[0] + 1, lam[1] + 1)
    norm_top = datum.form(lr, lr)
    mult: dict[Weight, int] = {lam: 1}
    for mu in _dominant_weights_below(datum, lam)[1:]:
        total = 0
        for alpha in datum.positive_roots:
            k = 1
            while True:
                nu = (mu[0] + k * alpha[0], mu[1] + k * alpha[1])
                m = mult.get(dominant_representative(datum, nu), 0)
                if not m:
                    break
                total += m * datum.form(nu, alpha)
                k += 1
        mr = (mu[0] + 1, mu[1] + 1)
        denom = norm_top - datum.form(mr, mr)
        q, rem = divmod(2 * total, denom)
        assert rem == 0, "Freudenthal recursion produced a non-integer multiplicity"
        if q:
            mult[mu] = q
    return tuple(sorted(mult.items()))


def dominant_multiplicities(datum: RootDatum, lam: Weight) -> dict[Weight, int]:
    return dict(_dominant_multiplicities(datum, lam))


def orbit(datum: RootDatum, x: Weight) -> set[Weight]:
    return {w.act(x) for w in datum.finite_weyl}


@lru_cache(maxsize=4096)
def _weyl_character_items(datum: RootDatum, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    out = {}
    for mu, m in _dominant_multiplicities(datum, lam):
        for x in orbit(datum, mu):
            out[x] = m
    return tuple(sorted(out.items()))


def weyl_character(datum: RootDatum, lam: Weight) -> Character:
    """ch of the Weyl module with highest weight lam, by Freudenthal's formula."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return Character(_weyl_character_items(datum, lam))


def weyl_dimension(datum: RootDatum, lam: Weight) -> int:
    a, b = lam
    if datum.id is RootSystemId.A2:
        return (a + 1) * (b + 1) * (a + b + 2) // 2
    return (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) // 6


# -- chi-basis arithmetic -------------------------------------------------------


def multiply_by_chi(datum: RootDatum, ch: Character, lam: Weight) -> ChiExpansion:
    """ch * chi(lam) = sum_x ch(x) chi(lam + x), in the chi basis."""
    out = ChiExpansion()
    for x, m in ch.items():
        n = chi_normalize(datum, (lam[0] + x[0], lam[1] + x[1]))
        if n is not None:
            out.add(n[0], n[1] * m)
    return out


def is_w_invariant(datum: RootDatum, ch: Character) -> bool:
    return all(ch.get(w.act(x), 0) == m for x, m in ch.items() for w in datum.finite_weyl)


def peel_to_chi(datum: RootDatum, ch: Character) -> ChiExpansion:
    """Expand a W-invariant character in the chi basis by removing highest weights."""
    if not is_w_invariant(datum, ch):
        raise ValueError("character is not invariant under the finite Weyl group")
    rest = Character(ch)
    out = ChiExpansion()
    while rest:
        top = max((x for x in rest if is_dominant(x)), key=weight_key)
        c = rest[top]
        out.add(top, c)
        for x, m in _weyl_character_items(datum, top):
            rest.add(x, -c * m)
    return out


def chi_to_character(datum: RootDatum, expansion: ChiExpansion) -> Character:
    out = Character()
    for lam, c in expansion.items():
        for x, m in _weyl_character_items(datum, lam):
            out.add(x, c * m)
    return out


def cavallin_reduce_b2(mu: Weight, nu: Weight) -> tuple[Weight, Weight]:
    """Shrink (mu, nu) to a smaller pair with the same Weyl-module weight multiplicity."""
    c, d = root_coordinates(get_datum("B2"), (mu[0] - nu[0], mu[1] - nu[1]))
    if c.denominator != 1 or d.denominator != 1 or c < 0 or d < 0:
        raise ValueError(f"{nu} is not below {mu}")
    small = (min(mu[0], int(c)), min(mu[1], int(d)))
    return small, (nu[0] - mu[0] + small[0], nu[1] - mu[1] + small[1])


def from_triples(triples: Iterable[Iterable[int]], cls=Character):
    return cls({(a, b): m for a, b, m in triples})
