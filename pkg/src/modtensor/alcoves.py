"""The p-dilated dot action of the affine Weyl group on rank-2 weights.

Geometry is done in shifted coordinates y = x + rho, where s_{alpha,r} fixes
the hyperplane <y, alpha^v> = p*r.  Scaling y = p*z makes alcove shapes
independent of p, so alcove identity and walls are computed on z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootdata import RootDatum, RootSystemId, Weight, WeylElement, get_datum, is_dominant, leq

# Names of the alcoves in the p-restricted region and a little beyond,
# as products of the affine simple reflections s (highest short root, level 1),
# t (alpha1, level 0) and u (alpha2, level 0).  Words act right to left.
ALCOVE_WORDS = {
    RootSystemId.A2: {"C0": "", "C1": "s", "C2a": "su", "C2b": "st"},
    RootSystemId.B2: {
        "C0": "",
        "C1": "s",
        "C2": "st",
        "C3": "stu",
        "C3a": "sts",
        "C4a": "stut",
        "C4b": "stus",
    },
}


@dataclass(frozen=True, order=True)
class AffineReflection:
    """s_{alpha,r}, fixing {x : <x + rho, alpha^v> = p r}."""

    root: int
    level: int


@dataclass(frozen=True)
class Alcove:
    """Region p*n_a < <x + rho, a^v> < p*(n_a + 1) for every positive root a."""

    system: RootSystemId
    levels: tuple[int, ...]

    def __post_init__(self):
        datum = get_datum(self.system)
        if len(self.levels) != len(datum.positive_roots):
            raise ValueError(f"{self.system.value} alcoves need {len(datum.positive_roots)} levels")
        if _interior_point(self.system, self.levels) is None:
            raise ValueError(f"empty alcove {self.levels} for {self.system.value}")

    @property
    def datum(self) -> RootDatum:
        return get_datum(self.system)


@dataclass(frozen=True)
class SignedAffineElement:
    """Dot action y -> A y + p*translation on y = x + rho (translation in weight coords)."""

    linear: str
    matrix: tuple[tuple[int, int], tuple[int, int]]
    translation: Weight
    sign: int

    def act(self, p: int, x: Weight) -> Weight:
        y = (x[0] + 1, x[1] + 1)
        (m00, m01), (m10, m11) = self.matrix
        return (
            m00 * y[0] + m01 * y[1] + p * self.translation[0] - 1,
            m10 * y[0] + m11 * y[1] + p * self.translation[1] - 1,
        )

    def compose(self, other: SignedAffineElement, datum: RootDatum) -> SignedAffineElement:
        """self after other."""
        a, b = self.matrix, other.matrix
        m = tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))
        g = other.translation
        t = (
            a[0][0] * g[0] + a[0][1] * g[1] + self.translation[0],
            a[1][0] * g[0] + a[1][1] * g[1] + self.translation[1],
        )
        return SignedAffineElement(_label_of(datum, m), m, t, self.sign * other.sign)


def _label_of(datum: RootDatum, matrix) -> str:
    for w in datum.finite_weyl:
        if w.matrix == matrix:
            return w.label
    raise AssertionError("linear part is not in the finite Weyl group")


def _ceil_div(n: int, p: int) -> int:
    return -((-n) // p)


def shifted_pairings(datum: RootDatum, x: Weight) -> tuple[int, ...]:
    return datum.pairings((x[0] + 1, x[1] + 1))


# -- z-space helpers (p-free geometry) ---------------------------------------


def _z_pairings(datum: RootDatum, z) -> tuple:
    return tuple(c0 * z[0] + c1 * z[1] for c0, c1 in datum.coroot_pairings)


def _z_levels(datum: RootDatum, z) -> tuple[int, ...]:
    return tuple(q.__floor__() for q in _z_pairings(datum, z))


def _z_reflect(datum: RootDatum, s: AffineReflection, z):
    q = _z_pairings(datum, z)[s.root] - s.level
    root = datum.positive_roots[s.root]
    return (z[0] - q * root[0], z[1] - q * root[1])


@lru_cache(maxsize=None)
def _interior_point(system: RootSystemId, levels: tuple[int, ...]):
    """A point z strictly inside the alcove, or None if the region is empty.

    Alcove centroids have denominators dividing 6 in weight coordinates for
    both systems, so scanning the 1/6-grid of the simple-coroot box is enough.
    """
    datum = get_datum(system)
    n1, n2 = levels[0], levels[1]
    for i in range(6 * n1 + 1, 6 * n1 + 6):
        for j in range(6 * n2 + 1, 6 * n2 + 6):
            z = (Fraction(i, 6), Fraction(j, 6))
            q = _z_pairings(datum, z)
            if all(n < v < n + 1 for n, v in zip(levels, q)):
                return z
    return None


def _alcove(datum: RootDatum, levels) -> Alcove:
    return Alcove(datum.id, tuple(levels))


def fundamental_alcove(datum: RootDatum) -> Alcove:
    return _alcove(datum, (0,) * len(datum.positive_roots))


# -- dot action ---------------------------------------------------------------


def dot_reflect(datum: RootDatum, p: int, s: AffineReflection, x: Weight) -> Weight:
    q = shifted_pairings(datum, x)[s.root] - p * s.level
    root = datum.positive_roots[s.root]
    return (x[0] - q * root[0], x[1] - q * root[1])


def finite_dot(w: WeylElement, x: Weight) -> Weight:
    y = w.act((x[0] + 1, x[1] + 1))
    return (y[0] - 1, y[1] - 1)


def simple_affine_reflections(datum: RootDatum) -> dict[str, AffineReflection]:
    hs = datum.root_index("ahs") if datum.id is RootSystemId.B2 else datum.root_index("ah")
    return {"s": AffineReflection(hs, 1), "t": AffineReflection(0, 0), "u": AffineReflection(1, 0)}


def apply_word(datum: RootDatum, p: int, word: str, x: Weight) -> Weight:
    gens = simple_affine_reflections(datum)
    for letter in reversed(word):
        x = dot_reflect(datum, p, gens[letter], x)
    return x


@lru_cache(maxsize=None)
def named_alcoves(system: RootSystemId) -> dict[str, Alcove]:
    """Levels of the named alcoves, derived from their words acting on C0."""
    datum = get_datum(system)
    gens = simple_affine_reflections(datum)
    z0 = _interior_point(system, (0,) * len(datum.positive_roots))
    out = {}
    for name, word in ALCOVE_WORDS[system].items():
        z = z0
        for letter in reversed(word):
            z = _z_reflect(datum, gens[letter], z)
        out[name] = _alcove(datum, _z_levels(datum, z))
    return out


def alcove_name(datum: RootDatum, alcove: Alcove | None) -> str | None:
    if alcove is None:
        return None
    for name, c in named_alcoves(datum.id).items():
        if c == alcove:
            return name
    return None


def upper_closure_alcove(datum: RootDatum, p: int, lam: Weight) -> Alcove:
    return _alcove(datum, [_ceil_div(q, p) - 1 for q in shifted_pairings(datum, lam)])


def is_p_regular(datum: RootDatum, p: int, lam: Weight) -> bool:
    return all(q % p for q in shifted_pairings(datum, lam))


def alcove_of(datum: RootDatum, p: int, x: Weight) -> Alcove | None:
    """The alcove containing x, or None when x lies on a reflection hyperplane."""
    if not is_p_regular(datum, p, x):
        return None
    return _alcove(datum, [q // p for q in shifted_pairings(datum, x)])


def in_alcove(datum: RootDatum, p: int, alcove: Alcove, x: Weight) -> bool:
    return all(p * n < q < p * (n + 1) for n, q in zip(alcove.levels, shifted_pairings(datum, x)))


def in_upper_closure(datum: RootDatum, p: int, alcove: Alcove, x: Weight) -> bool:
    return all(p * n < q <= p * (n + 1) for n, q in zip(alcove.levels, shifted_pairings(datum, x)))


def in_closure(datum: RootDatum, p: int, alcove: Alcove, x: Weight) -> bool:
    return all(p * n <= q <= p * (n + 1) for n, q in zip(alcove.levels, shifted_pairings(datum, x)))


def on_hyperplane(datum: RootDatum, p: int, s: AffineReflection, x: Weight) -> bool:
    return shifted_pairings(datum, x)[s.root] == p * s.level


def separating_count(a: Alcove, b: Alcove) -> int:
    return sum(abs(m - n) for m, n in zip(a.levels, b.levels))


def length(alcove: Alcove) -> int:
    """Number of reflection hyperplanes separating C0 from the alcove."""
    return sum(abs(n) for n in alcove.levels)


@lru_cache(maxsize=None)
def _walls(system: RootSystemId, levels: tuple[int, ...]):
    datum = get_datum(system)
    z = _interior_point(system, levels)
    here = Alcove(system, levels)
    found = []
    for i, n in enumerate(levels):
        for m, position in ((n, "lower"), (n + 1, "upper")):
            s = AffineReflection(i, m)
            image = Alcove(system, _z_levels(datum, _z_reflect(datum, s, z)))
            if separating_count(here, image) == 1:
                found.append((s, position))
    return tuple(found)


def walls(datum: RootDatum, p: int, alcove: Alcove) -> list[tuple[AffineReflection, str]]:
    """The three walls of the alcove with their position (upper or lower)."""
    return list(_walls(alcove.system, alcove.levels))


def reflect_alcove(datum: RootDatum, s: AffineReflection, alcove: Alcove) -> Alcove:
    z = _interior_point(alcove.system, alcove.levels)
    return _alcove(datum, _z_levels(datum, _z_reflect(datum, s, z)))


def wall_between(datum: RootDatum, a: Alcove, b: Alcove) -> AffineReflection | None:
    for s, _ in _walls(a.system, a.levels):
        if reflect_alcove(datum, s, a) == b:
            return s
    return None


def lower_walls(datum: RootDatum, p: int, alcove: Alcove) -> list[AffineReflection]:
    return [s for s, pos in walls(datum, p, alcove) if pos == "lower"]


# -- reflection smallness -----------------------------------------------------


def reflection_small(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> bool:
    """Is every lam + w(mu) weakly on the lam side of each upper wall of C(lam)?

    For a wall s with lam <= s.lam the requirement lam + w(mu) <= s.(lam + w(mu))
    is the inequality <lam + w(mu) + rho, alpha^v> <= p r.
    """
    alcove = upper_closure_alcove(datum, p, lam)
    checks = []
    for s, _ in walls(datum, p, alcove):
        reflected = dot_reflect(datum, p, s, lam)
        if reflected == lam or leq(datum, lam, reflected):
            checks.append(s)
    for w in datum.finite_weyl:
        wm = w.act(mu)
        x = (lam[0] + wm[0], lam[1] + wm[1])
        q = shifted_pairings(datum, x)
        for s in checks:
            if q[s.root] > p * s.level:
                return False
    return True


def reflection_small_closed_form(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> bool | None:
    """Coordinate inequalities for lam in the upper closure of a restricted alcove.

    Returns None when the alcove of lam has no closed form listed here.
    """
    a, b = lam
    a_, b_ = mu
    name = alcove_name(datum, upper_closure_alcove(datum, p, lam))
    if datum.id is RootSystemId.A2:
        if name == "C0":
            return a + b + a_ + b_ <= p - 2
        if name == "C1":
            return a + a_ + b_ <= p - 1 and b + a_ + b_ <= p - 1
        return None
    if name == "C0":
        return 2 * a + b + 2 * a_ + b_ <= p - 3
    if name == "C1":
        return a + b + a_ + b_ <= p - 2
    if name == "C2":
        return 2 * a + b + 2 * a_ + b_ <= 2 * p - 3 and b + 2 * a_ + b_ <= p - 1
    if name == "C3":
        return a + a_ + b_ <= p - 1 and b + 2 * a_ + b_ <= p - 1
    return None


# -- W_C, folding, lengths -----------------------------------------------------


def _as_element(datum: RootDatum, s: AffineReflection) -> SignedAffineElement:
    root = datum.positive_roots[s.root]
    c = datum.coroot_pairings[s.root]
    m = ((1 - root[0] * c[0], -root[0] * c[1]), (-root[1] * c[0], 1 - root[1] * c[1]))
    return SignedAffineElement(_label_of(datum, m), m, (s.level * root[0], s.level * root[1]), -1)


def wc_elements(datum: RootDatum, p: int, alcove: Alcove) -> list[SignedAffineElement]:
    """The finite group generated by reflections in the lower walls of the alcove."""
    identity = SignedAffineElement("", ((1, 0), (0, 1)), (0, 0), 1)
    gens = [_as_element(datum, s) for s in lower_walls(datum, p, alcove)]
    seen = {(identity.matrix, identity.translation): identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                k = h.compose(g, datum)
                key = (k.matrix, k.translation)
                if key not in seen:
                    seen[key] = k
                    nxt.append(k)
        frontier = nxt
        if len(seen) > 64:
            raise AssertionError("W_C is unexpectedly infinite")
    return sorted(seen.values(), key=lambda e: (e.sign < 0, e.linear, e.translation))


def _violated_wall(datum: RootDatum, p: int, alcove: Alcove, x: Weight):
    q = shifted_pairings(datum, x)
    for s, pos in walls(datum, p, alcove):
        bound = p * s.level
        if (pos == "upper" and q[s.root] > bound) or (pos == "lower" and q[s.root] < bound):
            return s
    return None


def fold_to_closure(
    datum: RootDatum, p: int, alcove: Alcove, x: Weight
) -> tuple[Weight, int, list[AffineReflection]]:
    path: list[AffineReflection] = []
    for _ in range(100_000):
        s = _violated_wall(datum, p, alcove, x)
        if s is None:
            return x, (-1) ** len(path), path
        x = dot_reflect(datum, p, s, x)
        path.append(s)
    raise AssertionError("folding did not terminate")


def dominant_fold(datum: RootDatum, p: int, x: Weight) -> tuple[Weight, int, int | None]:
    """Representative in the closure of C0, folding sign, and affine length (regular x only)."""
    y, sign, _ = fold_to_closure(datum, p, fundamental_alcove(datum), x)
    alcove = alcove_of(datum, p, x)
    return y, sign, None if alcove is None else length(alcove)


def omega_dot_b2(p: int, lam: Weight, datum: RootDatum | None = None) -> Weight:
    """The nontrivial element of the stabilizer of C0 in the extended affine group (B2 only)."""
    if datum is not None and datum.id is not RootSystemId.B2:
        raise NotImplementedError("omega is only implemented for B2")
    a, b = lam
    return (a, p - 2 * a - b - 4)


def restricted_weights(p: int) -> list[Weight]:
    return [(a, b) for a in range(p) for b in range(p)]


def dominant_in(datum: RootDatum, p: int, alcove: Alcove, upper: bool = False) -> list[Weight]:
    """Dominant weights in the alcove (or its upper closure), bounded by the alcove itself."""
    bound = p * (max(alcove.levels) + 2)
    test = in_upper_closure if upper else in_alcove
    return [
        (a, b)
        for a in range(bound)
        for b in range(bound)
        if is_dominant((a, b)) and test(datum, p, alcove, (a, b))
    ]
