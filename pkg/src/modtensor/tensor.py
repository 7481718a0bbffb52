"""Tensor products of simple modules: decompositions, closed forms, fusion."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import alcoves as al
from .characters import Character, ChiExpansion, Sparse, multiply_by_chi, weight_key, weyl_character
from .rootdata import RootDatum, RootSystemId, Weight, is_dominant
from .simples import base_p_expand, simple_character, simple_chi, simple_dimension


class SimpleExpansion(Sparse):
    """Multiplicities [M : L(nu)] of a module character M."""

    def is_multiplicity_free(self) -> bool:
        return all(v <= 1 for v in self.values())


class ReflectionSmallnessError(ValueError):
    pass


# -- vectorized chi-basis products ------------------------------------------------


@lru_cache(maxsize=8192)
def _weight_arrays(datum: RootDatum, p: int, mu: Weight):
    ch = simple_character(datum, p, mu)
    pts = np.array(list(ch.keys()), dtype=np.int64).reshape(-1, 2)
    mult = np.array(list(ch.values()), dtype=np.int64)
    return pts, mult


def _chi_sum(datum: RootDatum, shifted: np.ndarray, coef: np.ndarray) -> ChiExpansion:
    """sum_i coef[i] * chi(shifted[i] - rho), normalizing each term to the dominant chamber."""
    c = np.array(datum.coroot_pairings, dtype=np.int64)
    keep = np.all(shifted @ c.T != 0, axis=1)
    y, coef = shifted[keep].copy(), coef[keep].copy()
    r1, r2 = datum.simple_roots
    for _ in range(4 * len(datum.finite_weyl)):
        neg = y[:, 0] < 0
        if neg.any():
            y[neg] -= np.outer(y[neg, 0], r1)
            coef[neg] = -coef[neg]
        neg = y[:, 1] < 0
        if neg.any():
            y[neg] -= np.outer(y[neg, 1], r2)
            coef[neg] = -coef[neg]
        if not (y < 0).any():
            break
    else:
        raise AssertionError("dominant chamber reduction did not converge")
    if not len(y):
        return ChiExpansion()
    width = int(y[:, 1].max()) + 1
    keys = y[:, 0] * width + y[:, 1]
    order = np.argsort(keys, kind="stable")
    keys, coef = keys[order], coef[order]
    starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
    sums = np.add.reduceat(coef, starts)
    out = ChiExpansion()
    for k, s in zip(keys[starts].tolist(), sums.tolist()):
        if s:
            out[(k // width - 1, k % width - 1)] = s
    return out


def tensor_chi(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> ChiExpansion:
    """ch L(lam) * ch L(mu) in the chi basis (Brauer-Klimyk on the chi-expansion of one factor)."""
    chi_l, chi_m = simple_chi(datum, p, lam), simple_chi(datum, p, mu)
    cost_l = len(chi_l) * simple_dimension(datum, p, mu)
    cost_m = len(chi_m) * simple_dimension(datum, p, lam)
    if cost_m < cost_l:
        lam, mu, chi_l = mu, lam, chi_m
    pts, mult = _weight_arrays(datum, p, mu)
    xs = np.array(list(chi_l.keys()), dtype=np.int64) + 1
    cs = np.array(list(chi_l.values()), dtype=np.int64)
    shifted = (xs[:, None, :] + pts[None, :, :]).reshape(-1, 2)
    coef = (cs[:, None] * mult[None, :]).reshape(-1)
    return _chi_sum(datum, shifted, coef)


def chi_to_simples(datum: RootDatum, p: int, expansion: ChiExpansion) -> SimpleExpansion:
    """Peel simple characters off a chi-basis element, highest (a+b, a) first."""
    rest = dict(expansion)
    heap = [(-weight_key(x)[0], -weight_key(x)[1], x) for x in rest]
    heapq.heapify(heap)
    out = SimpleExpansion()
    while heap:
        _, _, top = heapq.heappop(heap)
        c = rest.pop(top, 0)
        if not c:
            continue
        out[top] = c
        for x, m in simple_chi(datum, p, top).items():
            if x == top:
                continue
            if x not in rest:
                heapq.heappush(heap, (-weight_key(x)[0], -weight_key(x)[1], x))
            rest[x] = rest.get(x, 0) - c * m
    return out


def tensor_simple_decomposition(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> SimpleExpansion:
    """Composition multiplicities of L(lam) (x) L(mu)."""
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError("weights must be dominant")
    return _decomposition(datum, p, lam, mu) if lam <= mu else _decomposition(datum, p, mu, lam)


@lru_cache(maxsize=32768)
def _decomposition_items(datum: RootDatum, p: int, lam: Weight, mu: Weight):
    return tuple(sorted(chi_to_simples(datum, p, tensor_chi(datum, p, lam, mu)).items()))


def _decomposition(datum, p, lam, mu) -> SimpleExpansion:
    return SimpleExpansion(_decomposition_items(datum, p, lam, mu))


def is_multiplicity_free_oracle(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> bool:
    return tensor_simple_decomposition(datum, p, lam, mu).is_multiplicity_free()


# -- closed forms ---------------------------------------------------------------


def reflection_small_multiplicities(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> SimpleExpansion:
    """Multiplicities sum_{u in W_C} sign(u) dim L(mu)_{u.nu - lam} for nu in the upper closure of C(lam)."""
    if not al.reflection_small(datum, p, lam, mu):
        raise ReflectionSmallnessError(f"{mu} is not reflection small with respect to {lam} at p={p}")
    alcove = al.upper_closure_alcove(datum, p, lam)
    group = al.wc_elements(datum, p, alcove)
    inverses = [_inverse(datum, p, u) for u in group]
    ch = simple_character(datum, p, mu)
    candidates = set()
    for delta in ch:
        x = (lam[0] + delta[0], lam[1] + delta[1])
        for inv in inverses:
            nu = inv.act(p, x)
            if al.in_upper_closure(datum, p, alcove, nu):
                candidates.add(nu)
    out = SimpleExpansion()
    for nu in candidates:
        total = 0
        for u in group:
            x = u.act(p, nu)
            total += u.sign * ch.get((x[0] - lam[0], x[1] - lam[1]), 0)
        if total < 0:
            raise AssertionError(f"negative multiplicity at {nu}")
        if total:
            out[nu] = total
    return out


def _inverse(datum: RootDatum, p: int, u: al.SignedAffineElement) -> al.SignedAffineElement:
    # W_C is a finite group, so the inverse is some power of u
    v = u
    identity_key = (((1, 0), (0, 1)), (0, 0))
    prev = u
    while (v.matrix, v.translation) != identity_key:
        prev = v
        v = u.compose(v, datum)
    return prev


def klimyk_char0(datum: RootDatum, lam: Weight, mu: Weight) -> SimpleExpansion:
    """Characteristic-zero tensor multiplicities via chi(lam) * chi(mu)."""
    return SimpleExpansion(multiply_by_chi(datum, weyl_character(datum, lam), mu))


def minuscule_decompose(datum: RootDatum, p: int, lam: Weight, varpi: Weight) -> SimpleExpansion:
    if varpi not in datum.minuscule_weights:
        raise ValueError(f"{varpi} is not minuscule for {datum.name}")
    if not al.is_p_regular(datum, p, lam):
        raise ValueError(f"{lam} is p-singular for p={p}")
    alcove = al.upper_closure_alcove(datum, p, lam)
    out = SimpleExpansion()
    for w in {w.act(varpi) for w in datum.finite_weyl}:
        x = (lam[0] + w[0], lam[1] + w[1])
        if al.in_upper_closure(datum, p, alcove, x):
            out[x] = 1
    return out


# -- fusion -------------------------------------------------------------------------


def c0_weights(datum: RootDatum, p: int) -> list[Weight]:
    return al.dominant_in(datum, p, al.fundamental_alcove(datum))


def fusion_product(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> SimpleExpansion:
    """All Verlinde coefficients c_{lam,mu}^nu, by folding classical multiplicities into C0."""
    c0 = al.fundamental_alcove(datum)
    for x in (lam, mu):
        if not (is_dominant(x) and al.in_alcove(datum, p, c0, x)):
            raise ValueError(f"{x} is not in C0 for p={p}")
    out = SimpleExpansion()
    for kappa, c in klimyk_char0(datum, lam, mu).items():
        if not al.is_p_regular(datum, p, kappa):
            continue
        nu, sign, _ = al.dominant_fold(datum, p, kappa)
        out.add(nu, sign * c)
    if any(v < 0 for v in out.values()):
        raise AssertionError("negative Verlinde coefficient")
    return out


def verlinde_coefficient(datum: RootDatum, p: int, lam: Weight, mu: Weight, nu: Weight) -> int:
    if not (is_dominant(nu) and al.in_alcove(datum, p, al.fundamental_alcove(datum), nu)):
        raise ValueError(f"{nu} is not in C0 for p={p}")
    return fusion_product(datum, p, lam, mu).get(nu, 0)


# -- necessary conditions for complete reducibility ---------------------------------


@dataclass(frozen=True)
class NecessaryConditions:
    levi: bool
    singular: bool
    gfd: bool

    @property
    def all(self) -> bool:
        return self.levi and self.singular and self.gfd


def levi_condition(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> bool:
    (a, b), (a_, b_) = lam, mu
    k = 1 if datum.id is RootSystemId.A2 else 2
    return a + a_ + min(b, b_) <= p - 1 and b + b_ + k * min(a, a_) <= p - 1


def cr_necessary_conditions(
    datum: RootDatum, p: int, lam: Weight, mu: Weight, decomposition: SimpleExpansion | None = None
) -> NecessaryConditions:
    if decomposition is None:
        decomposition = tensor_simple_decomposition(datum, p, lam, mu)
    reg_l, reg_m = al.is_p_regular(datum, p, lam), al.is_p_regular(datum, p, mu)
    regular_factors = [nu for nu in decomposition if al.is_p_regular(datum, p, nu)]
    singular = not ((not reg_l or not reg_m) and regular_factors)
    gfd = True
    if reg_l and reg_m:
        bound = al.length(al.alcove_of(datum, p, lam)) + al.length(al.alcove_of(datum, p, mu))
        gfd = all(al.length(al.alcove_of(datum, p, nu)) <= bound for nu in regular_factors)
    return NecessaryConditions(levi_condition(datum, p, lam, mu), singular, gfd)


def weight_space_bound_check(
    datum: RootDatum, p: int, lam: Weight, mu: Weight, decomposition: SimpleExpansion | None = None
) -> bool:
    if decomposition is None:
        decomposition = tensor_simple_decomposition(datum, p, lam, mu)
    ch = simple_character(datum, p, mu)
    return all(m <= ch.get((nu[0] - lam[0], nu[1] - lam[1]), 0) for nu, m in decomposition.items())


def steinberg_digit_pairs(p: int, lam: Weight, mu: Weight) -> list[tuple[Weight, Weight]]:
    dl, dm = base_p_expand(p, lam), base_p_expand(p, mu)
    n = max(len(dl), len(dm))
    dl += [(0, 0)] * (n - len(dl))
    dm += [(0, 0)] * (n - len(dm))
    return list(zip(dl, dm))


def module_character(datum: RootDatum, p: int, expansion: SimpleExpansion) -> Character:
    out = Character()
    for nu, c in expansion.items():
        for x, m in simple_character(datum, p, nu).items():
            out.add(x, c * m)
    return out
