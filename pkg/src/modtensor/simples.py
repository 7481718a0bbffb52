"""Characters of simple modules.

Composition factors of Weyl modules with p-restricted highest weight follow
Jantzen's description for SL3 and Sp4: a regular weight in an alcove above C0
has exactly one further factor, its mirror image in the affine lower wall.
Small primes below the Coxeter number are listed explicitly.  Simple
characters then come from unitriangular inversion, and Steinberg's tensor
product theorem covers all other dominant weights.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from . import alcoves as al
from .characters import Character, ChiExpansion, chi_normalize, chi_to_character, weight_key
from .rootdata import RootDatum, RootSystemId, Weight, is_dominant, leq


@dataclass(frozen=True)
class CompositionSeries:
    factors: tuple[tuple[Weight, int], ...]

    @property
    def head(self) -> Weight:
        return self.factors[0][0]

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.factors)


# Weyl modules below the Coxeter number that are not simple, keyed by (system, p).
SMALL_PRIME_FACTORS: dict[tuple[RootSystemId, int], dict[Weight, Weight]] = {
    (RootSystemId.B2, 2): {(1, 0): (0, 0)},
    (RootSystemId.B2, 3): {(1, 2): (0, 2)},
}

# Alcoves whose regular weights have a two-factor Weyl module.
_TWO_FACTOR_ALCOVES = {RootSystemId.A2: {"C1"}, RootSystemId.B2: {"C1", "C2", "C3"}}


def is_restricted(p: int, lam: Weight) -> bool:
    return 0 <= lam[0] < p and 0 <= lam[1] < p


def affine_lower_wall(datum: RootDatum, p: int, alcove: al.Alcove) -> al.AffineReflection:
    """The lower wall that is not a wall of the dominant chamber."""
    found = [s for s in al.lower_walls(datum, p, alcove) if s.level > 0]
    if len(found) != 1:
        raise AssertionError(f"expected one affine lower wall, got {found}")
    return found[0]


def _second_factor(datum: RootDatum, p: int, lam: Weight) -> Weight | None:
    small = SMALL_PRIME_FACTORS.get((datum.id, p))
    if p < datum.coxeter_number:
        return None if small is None else small.get(lam)
    alcove = al.upper_closure_alcove(datum, p, lam)
    name = al.alcove_name(datum, alcove)
    if name not in _TWO_FACTOR_ALCOVES[datum.id]:
        return None
    wall = affine_lower_wall(datum, p, alcove)
    if al.in_alcove(datum, p, alcove, lam):
        return al.dot_reflect(datum, p, wall, lam)
    if datum.id is RootSystemId.A2 or name != "C3":
        return None
    # Sp4: the singular non-simple weights sit on F_{3,4b} but off F_{3,4a}
    if al.shifted_pairings(datum, lam)[0] == p:
        return None
    nu, _, _ = al.dominant_fold(datum, p, lam)
    q = al.shifted_pairings(datum, nu)
    hs = datum.root_index("ahs")
    on_walls = [q[0] == 0, q[1] == 0, q[hs] == p]
    if on_walls != [False, False, True]:
        return None
    return al.dot_reflect(datum, p, wall, lam)


def weyl_factors_restricted(datum: RootDatum, p: int, lam: Weight) -> CompositionSeries:
    if not is_restricted(p, lam):
        raise ValueError(f"{lam} is not {p}-restricted")
    other = _second_factor(datum, p, lam)
    if other is None:
        return CompositionSeries(((lam, 1),))
    if not (is_dominant(other) and leq(datum, other, lam) and other != lam):
        raise AssertionError(f"bad composition factor {other} for {lam}")
    return CompositionSeries(((lam, 1), (other, 1)))


# -- memo ----------------------------------------------------------------------

_lock = threading.Lock()
_SIMPLE_CHI: dict[tuple[str, int, Weight], tuple[tuple[Weight, int], ...]] = {}


def export_memo() -> dict[tuple[str, int, Weight], tuple[tuple[Weight, int], ...]]:
    with _lock:
        return dict(_SIMPLE_CHI)


def import_memo(entries) -> None:
    """Seed the memo; entries computed elsewhere are identical by construction."""
    with _lock:
        for key, value in entries.items():
            _SIMPLE_CHI.setdefault(key, tuple(value))


def clear_memo() -> None:
    with _lock:
        _SIMPLE_CHI.clear()
    _simple_character_items.cache_clear()
    _simple_chi_items.cache_clear()


def simple_chi_restricted(datum: RootDatum, p: int, lam: Weight) -> ChiExpansion:
    """ch L(lam) in the chi basis for p-restricted lam."""
    key = (datum.name, p, lam)
    hit = _SIMPLE_CHI.get(key)
    if hit is None:
        out = ChiExpansion({lam: 1})
        for mu, m in weyl_factors_restricted(datum, p, lam).factors[1:]:
            if not is_restricted(p, mu):
                raise AssertionError(f"composition factor {mu} of {lam} is not restricted")
            out = out - simple_chi_restricted(datum, p, mu).scaled(m)
        hit = tuple(sorted(out.items()))
        with _lock:
            _SIMPLE_CHI.setdefault(key, hit)
    return ChiExpansion(hit)


def simple_character_restricted(datum: RootDatum, p: int, lam: Weight) -> Character:
    if not is_restricted(p, lam):
        raise ValueError(f"{lam} is not {p}-restricted")
    return Character(_simple_character_items(datum, p, lam))


def base_p_expand(p: int, lam: Weight) -> list[Weight]:
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    a, b = lam
    digits = [(a % p, b % p)]
    a, b = a // p, b // p
    while a or b:
        digits.append((a % p, b % p))
        a, b = a // p, b // p
    return digits


def frobenius_twist(ch: Character, r: int, p: int) -> Character:
    return ch.twisted(p, r)


@lru_cache(maxsize=8192)
def _simple_character_items(datum: RootDatum, p: int, lam: Weight):
    digits = base_p_expand(p, lam)
    if len(digits) == 1:
        return tuple(sorted(chi_to_character(datum, simple_chi_restricted(datum, p, lam)).items()))
    head = Character(_simple_character_items(datum, p, digits[0]))
    rest = (lam[0] // p, lam[1] // p)
    tail = Character(_simple_character_items(datum, p, rest)).twisted(p)
    return tuple(sorted((head * tail).items()))


def simple_character(datum: RootDatum, p: int, lam: Weight) -> Character:
    """ch L(lam) for any dominant lam, via Steinberg's tensor product theorem."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return Character(_simple_character_items(datum, p, lam))


def simple_dimension(datum: RootDatum, p: int, lam: Weight) -> int:
    dim = 1
    for digit in base_p_expand(p, lam):
        dim *= simple_character(datum, p, digit).dim()
    return dim


@lru_cache(maxsize=65536)
def _simple_chi_items(datum: RootDatum, p: int, lam: Weight):
    if is_restricted(p, lam):
        return tuple(simple_chi_restricted(datum, p, lam).items())
    head = simple_chi_restricted(datum, p, (lam[0] % p, lam[1] % p))
    tail = simple_character(datum, p, (lam[0] // p, lam[1] // p)).twisted(p)
    out = ChiExpansion()
    for x, c in head.items():
        for y, m in tail.items():
            n = chi_normalize(datum, (x[0] + y[0], x[1] + y[1]))
            if n is not None:
                out.add(n[0], c * m * n[1])
    return tuple(out.items())


def simple_chi(datum: RootDatum, p: int, lam: Weight) -> ChiExpansion:
    """ch L(lam) in the chi basis for any dominant lam."""
    return ChiExpansion(_simple_chi_items(datum, p, lam))


def peel_to_simples(datum: RootDatum, p: int, expansion: ChiExpansion) -> dict[Weight, int]:
    """Rewrite a chi-basis element in the basis of simple characters."""
    rest = ChiExpansion(expansion)
    out: dict[Weight, int] = {}
    while rest:
        top = max(rest, key=weight_key)
        c = rest[top]
        out[top] = c
        for x, m in _simple_chi_items(datum, p, top):
            rest.add(x, -c * m)
    return out


# -- tilting characters (partial) -------------------------------------------------

# Composition factors of T(w.lam0), lam0 in C0, as words applied to lam0.
_TILTING_WORDS = {
    RootSystemId.A2: {"s": ("", "s", ""), "st": ("s", "st", "", "s"), "su": ("s", "su", "", "s")},
    RootSystemId.B2: {"s": ("", "s", ""), "st": ("s", "st", "", "s"), "stu": ("st", "stu", "s", "st")},
}
# Walls whose weights carry simple tilting modules, as (root name, level).
_SIMPLE_TILTING_WALLS = {RootSystemId.B2: {("ahs", 1), ("ah", 1), ("ahs", 2)}}


def tilting_character_labeled(datum: RootDatum, p: int, lam: Weight) -> Character:
    """ch T(lam) where the composition factors are known explicitly.

    Covers the closure of C0, the singular restricted weights of SL3, the
    Sp4 weights on the walls F01, F12, F23, and regular weights in the first
    alcoves above C0 (p at least the Coxeter number).  Raises otherwise.
    """
    c0 = al.fundamental_alcove(datum)
    if al.in_closure(datum, p, c0, lam) and is_dominant(lam):
        return simple_character(datum, p, lam)
    regular = al.is_p_regular(datum, p, lam)
    if not regular and p >= datum.coxeter_number:
        if datum.id is RootSystemId.A2 and is_restricted(p, lam):
            return simple_character(datum, p, lam)
        q = al.shifted_pairings(datum, lam)
        hits = {(name, q[i] // p) for i, name in enumerate(datum.root_names) if q[i] % p == 0}
        if datum.id is RootSystemId.B2 and len(hits) == 1 and hits <= _SIMPLE_TILTING_WALLS[datum.id]:
            return simple_character(datum, p, lam)
    if regular and p >= datum.coxeter_number:
        name = al.alcove_name(datum, al.alcove_of(datum, p, lam))
        word = al.ALCOVE_WORDS[datum.id].get(name) if name else None
        labels = _TILTING_WORDS[datum.id].get(word) if word else None
        if labels is not None:
            lam0, _, _ = al.dominant_fold(datum, p, lam)
            out = Character()
            for w in labels:
                out = out + simple_character(datum, p, al.apply_word(datum, p, w, lam0))
            return out
    raise NotImplementedError(f"no tilting character data for {lam} at p={p}")
