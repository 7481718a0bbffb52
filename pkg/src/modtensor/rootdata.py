"""Rank-2 root data (A2 and B2) in fundamental-weight coordinates.

Weights are plain integer pairs ``(a, b)`` meaning a*w1 + b*w2.  Every
coroot pairing is linear in these coordinates, so a positive root is stored
together with its pairing vector ``c`` with <(a, b), alpha^v> = c[0]*a + c[1]*b.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, int]
Matrix = tuple[tuple[int, int], tuple[int, int]]

RHO: Weight = (1, 1)
ZERO: Weight = (0, 0)


class RootSystemId(str, Enum):
    A2 = "A2"
    B2 = "B2"


@dataclass(frozen=True)
class WeylElement:
    label: str  # shortest word in the simple reflections t = s_1, u = s_2
    length: int
    matrix: Matrix

    def act(self, x: Weight) -> Weight:
        (m00, m01), (m10, m11) = self.matrix
        return (m00 * x[0] + m01 * x[1], m10 * x[0] + m11 * x[1])

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1


@dataclass(frozen=True)
class RootDatum:
    id: RootSystemId
    root_names: tuple[str, ...]
    positive_roots: tuple[Weight, ...]
    coroot_pairings: tuple[Weight, ...]
    gram: Matrix  # integer multiple of the W-invariant form on weight coords
    coxeter_number: int
    finite_weyl: tuple[WeylElement, ...]
    minuscule_weights: tuple[Weight, ...]
    rho: Weight = RHO

    @property
    def simple_roots(self) -> tuple[Weight, Weight]:
        return self.positive_roots[0], self.positive_roots[1]

    @property
    def longest_element(self) -> WeylElement:
        return max(self.finite_weyl, key=lambda w: w.length)

    @property
    def name(self) -> str:
        return self.id.value

    def root_index(self, name: str) -> int:
        return self.root_names.index(name)

    def pairings(self, x: Weight) -> tuple[int, ...]:
        return tuple(c0 * x[0] + c1 * x[1] for c0, c1 in self.coroot_pairings)

    def form(self, x: Weight, y: Weight) -> int:
        (g00, g01), (g10, g11) = self.gram
        return x[0] * (g00 * y[0] + g01 * y[1]) + x[1] * (g10 * y[0] + g11 * y[1])

    def __repr__(self) -> str:
        return f"RootDatum({self.name})"


def _reflection_matrix(root: Weight, pairing: Weight) -> Matrix:
    # s(x) = x - <x, c> root, written on column vectors
    return (
        (1 - root[0] * pairing[0], -root[0] * pairing[1]),
        (-root[1] * pairing[0], 1 - root[1] * pairing[1]),
    )


def _matmul(m: Matrix, n: Matrix) -> Matrix:
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )  # type: ignore[return-value]


def _weyl_group(roots, pairings) -> tuple[WeylElement, ...]:
    gens = {"t": _reflection_matrix(roots[0], pairings[0]), "u": _reflection_matrix(roots[1], pairings[1])}
    identity: Matrix = ((1, 0), (0, 1))
    seen = {identity: ""}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            for g, gm in gens.items():
                prod = _matmul(m, gm)
                if prod not in seen:
                    seen[prod] = seen[m] + g
                    nxt.append(prod)
        frontier = nxt
    return tuple(WeylElement(word, len(word), m) for m, word in seen.items())


def _build(system: RootSystemId) -> RootDatum:
    if system is RootSystemId.A2:
        names = ("a1", "a2", "ah")
        roots = ((2, -1), (-1, 2), (1, 1))
        pairings = ((1, 0), (0, 1), (1, 1))
        gram = ((2, 1), (1, 2))
        h, minuscule = 3, ((1, 0), (0, 1))
    else:
        # w1 = e1+e2, w2 = e1; a1 = 2e2 long, a2 = e1-e2 short
        names = ("a1", "a2", "ahs", "ah")
        roots = ((2, -2), (-1, 2), (1, 0), (0, 2))
        pairings = ((1, 0), (0, 1), (2, 1), (1, 1))
        gram = ((2, 1), (1, 1))
        h, minuscule = 4, ((0, 1),)
    return RootDatum(system, names, roots, pairings, gram, h, _weyl_group(roots, pairings), minuscule)


@lru_cache(maxsize=None)
def get_datum(system: str | RootSystemId) -> RootDatum:
    if isinstance(system, str):
        try:
            system = RootSystemId(system.upper())
        except ValueError:
            raise ValueError(f"unknown root system {system!r}; expected A2 or B2") from None
    return _build(system)


def pair(datum: RootDatum, lam: Weight, alpha: int) -> int:
    if not 0 <= alpha < len(datum.positive_roots):
        raise IndexError(f"{datum.name} has no positive root with index {alpha}")
    c = datum.coroot_pairings[alpha]
    return c[0] * lam[0] + c[1] * lam[1]


def reflect(datum: RootDatum, lam: Weight, alpha: int) -> Weight:
    n = pair(datum, lam, alpha)
    root = datum.positive_roots[alpha]
    return (lam[0] - n * root[0], lam[1] - n * root[1])


def finite_orbit(datum: RootDatum, mu: Weight) -> list[tuple[Weight, str]]:
    """W_fin-orbit of ``mu``, each point paired with the shortest element reaching it."""
    orbit: dict[Weight, str] = {}
    for w in sorted(datum.finite_weyl, key=lambda w: (w.length, w.label)):
        orbit.setdefault(w.act(mu), w.label)
    return sorted(orbit.items())


def root_coordinates(datum: RootDatum, delta: Weight) -> tuple[Fraction, Fraction]:
    """Solve delta = c*alpha1 + d*alpha2 over the rationals."""
    (r00, r01), (r10, r11) = datum.simple_roots
    det = r00 * r11 - r10 * r01
    c = Fraction(delta[0] * r11 - delta[1] * r10, det)
    d = Fraction(r00 * delta[1] - r01 * delta[0], det)
    return c, d


def leq(datum: RootDatum, lam: Weight, mu: Weight) -> bool:
    c, d = root_coordinates(datum, (mu[0] - lam[0], mu[1] - lam[1]))
    return c.denominator == 1 and d.denominator == 1 and c >= 0 and d >= 0


def is_dominant(x: Weight) -> bool:
    return x[0] >= 0 and x[1] >= 0


def dual_weight(datum: RootDatum, mu: Weight) -> Weight:
    """-w0(mu): the highest weight of the dual module."""
    w0 = datum.longest_element.act(mu)
    return (-w0[0], -w0[1])
