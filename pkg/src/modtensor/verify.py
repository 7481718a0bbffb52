"""Exhaustive sweeps checking the classification tables against the decomposition oracle."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import alcoves as al
from . import simples
from .classify import restricted_verdict
from .rootdata import RootDatum, RootSystemId, Weight, dual_weight, get_datum
from .tensor import (
    c0_weights,
    cr_necessary_conditions,
    fusion_product,
    klimyk_char0,
    reflection_small_multiplicities,
    tensor_simple_decomposition,
    weight_space_bound_check,
)


@dataclass
class SweepReport:
    system: str
    p: int
    pairs_total: int = 0
    mf_oracle_true: int = 0
    mf_table_true: int = 0
    mismatches: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    workers: int = 1

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return asdict(self)


def _pair_record(datum: RootDatum, p: int, lam: Weight, mu: Weight) -> tuple[dict, bool, list[dict]]:
    dec = tensor_simple_decomposition(datum, p, lam, mu)
    oracle_mf = dec.is_multiplicity_free()
    v = restricted_verdict(datum, p, lam, mu)
    problems = []

    def flag(kind, **detail):
        problems.append({"kind": kind, "lambda": list(lam), "mu": list(mu), **detail})

    if oracle_mf != v.mf:
        flag("mf-table", oracle=oracle_mf, table=v.mf)
    if v.mf and not v.cr:
        flag("mf-not-cr")
    conditions = cr_necessary_conditions(datum, p, lam, mu, dec)
    if v.cr:
        bound = weight_space_bound_check(datum, p, lam, mu, dec) and weight_space_bound_check(
            datum, p, mu, lam, dec
        )
        if not (conditions.all and bound):
            flag("cr-necessary", levi=conditions.levi, singular=conditions.singular,
                 gfd=conditions.gfd, weight_bound=bound)
    if al.reflection_small(datum, p, lam, mu):
        closed = reflection_small_multiplicities(datum, p, lam, mu)
        alcove = al.upper_closure_alcove(datum, p, lam)
        if dict(closed) != dict(dec) or not all(al.in_upper_closure(datum, p, alcove, n) for n in closed):
            flag("theorem-b")
    record = {
        "system": datum.name,
        "p": p,
        "lambda": list(lam),
        "mu": list(mu),
        "cr": v.cr,
        "mf": v.mf,
        "rows": [m.label() for m in v.matched_rows],
    }
    return record, oracle_mf, problems


def _sweep_shard(system: str, p: int, lams: list[Weight], memo: dict):
    simples.import_memo(memo)
    datum = get_datum(system)
    mus = [mu for mu in al.restricted_weights(p) if mu != (0, 0)]
    out = []
    for lam in lams:
        for mu in mus:
            out.append(_pair_record(datum, p, lam, mu))
    return out, simples.export_memo()


def fusion_checks(datum: RootDatum, p: int) -> list[dict]:
    """Flipping, Omega-invariance (B2), the char-0 bound, and the MF bound via fusion."""
    weights = c0_weights(datum, p)
    table = {(lam, mu): fusion_product(datum, p, lam, mu) for lam in weights for mu in weights}
    problems = []
    for (lam, mu), prod in table.items():
        char0 = klimyk_char0(datum, lam, mu)
        for nu in weights:
            c = prod.get(nu, 0)
            if c > char0.get(nu, 0):
                problems.append({"kind": "verlinde-char0", "lambda": list(lam), "mu": list(mu), "nu": list(nu)})
            if c != table[(nu, dual_weight(datum, mu))].get(lam, 0):
                problems.append({"kind": "verlinde-flip", "lambda": list(lam), "mu": list(mu), "nu": list(nu)})
            if datum.id is RootSystemId.B2:
                wl, wn = al.omega_dot_b2(p, lam), al.omega_dot_b2(p, nu)
                if c != table[(wl, mu)].get(wn, 0):
                    problems.append({"kind": "verlinde-omega", "lambda": list(lam), "mu": list(mu), "nu": list(nu)})
    for kappa in al.restricted_weights(p):
        if not al.is_p_regular(datum, p, kappa):
            continue
        lam, _, _ = al.dominant_fold(datum, p, kappa)
        for mu in weights:
            if mu == (0, 0) or kappa == (0, 0) or not restricted_verdict(datum, p, kappa, mu).mf:
                continue
            if any(c > 1 for c in table[(lam, mu)].values()):
                problems.append({"kind": "verlinde-mf-bound", "lambda": list(kappa), "mu": list(mu)})
    return problems


def sweep(system: str, p: int, workers: int = 1) -> tuple[SweepReport, list[dict]]:
    """Check every nonzero restricted pair at p; returns the report and per-pair records."""
    start = time.perf_counter()
    datum = get_datum(system)
    lams = [lam for lam in al.restricted_weights(p) if lam != (0, 0)]
    memo = simples.export_memo()
    if workers > 1:
        shards = [lams[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_sweep_shard, datum.name, p, shard, memo) for shard in shards]
            parts = [f.result() for f in futures]
    else:
        parts = [_sweep_shard(datum.name, p, lams, {})]
    results = []
    for rows, new_memo in parts:
        results.extend(rows)
        simples.import_memo(new_memo)
    results.sort(key=lambda r: (tuple(r[0]["lambda"]), tuple(r[0]["mu"])))
    report = SweepReport(datum.name, p, workers=workers)
    records = []
    for record, oracle_mf, problems in results:
        records.append(record)
        report.pairs_total += 1
        report.mf_oracle_true += oracle_mf
        report.mf_table_true += record["mf"]
        report.mismatches.extend(problems)
    report.mismatches.extend(fusion_checks(datum, p))
    report.elapsed = time.perf_counter() - start
    return report, records
