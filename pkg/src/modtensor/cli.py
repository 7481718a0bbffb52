"""Command-line interface: ``modtensor {character,decompose,classify,verify,fusion}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 precondition failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import alcoves as al
from . import cache
from .characters import weyl_character
from .classify import verdict
from .rootdata import Weight, dual_weight, get_datum, is_dominant
from .simples import simple_character
from .tensor import (
    ReflectionSmallnessError,
    c0_weights,
    fusion_product,
    klimyk_char0,
    minuscule_decompose,
    reflection_small_multiplicities,
    tensor_simple_decomposition,
)
from .verify import sweep

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class PreconditionError(Exception):
    pass


def _weight(text: str) -> Weight:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a weight like 2,1; got {text!r}") from None
    if not is_dominant((a, b)):
        raise argparse.ArgumentTypeError(f"weight {text} is not dominant")
    return (a, b)


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _system(text: str) -> str:
    if text.upper() not in ("A2", "B2"):
        raise argparse.ArgumentTypeError("system must be a2 or b2")
    return text.upper()


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _expansion_json(expansion) -> list[list[int]]:
    return [[a, b, m] for (a, b), m in sorted(expansion.items())]


def cmd_character(args) -> int:
    datum = get_datum(args.system)
    ch = weyl_character(datum, args.weight) if args.weyl else simple_character(datum, args.p, args.weight)
    if args.format == "json":
        print(_dump({"system": datum.name, "p": args.p, "weight": list(args.weight),
                     "kind": "weyl" if args.weyl else "simple", "dim": ch.dim(), "character": ch.triples()}))
    else:
        for (a, b), m in ch.sorted_items():
            print(f"{a:>4} {b:>4}  {m}")
        print(f"dim {ch.dim()}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    datum = get_datum(args.system)
    p, lam, mu = args.p, args.lam, args.mu
    if args.method == "oracle":
        dec = tensor_simple_decomposition(datum, p, lam, mu)
    elif args.method == "theorem-b":
        try:
            dec = reflection_small_multiplicities(datum, p, lam, mu)
        except ReflectionSmallnessError as exc:
            raise PreconditionError(str(exc)) from None
    else:
        if mu not in datum.minuscule_weights:
            raise PreconditionError(f"{mu} is not a minuscule weight of {datum.name}")
        if not al.is_p_regular(datum, p, lam):
            raise PreconditionError(f"{lam} is p-singular for p={p}")
        dec = minuscule_decompose(datum, p, lam, mu)
    if args.method != "oracle" and dict(dec) != dict(tensor_simple_decomposition(datum, p, lam, mu)):
        print("error: method disagrees with the decomposition oracle", file=sys.stderr)
        return EXIT_MISMATCH
    print(_dump({"system": datum.name, "p": p, "lambda": list(lam), "mu": list(mu), "method": args.method,
                 "mf": all(v <= 1 for v in dec.values()), "decomposition": _expansion_json(dec)}))
    return EXIT_OK


def cmd_classify(args) -> int:
    datum = get_datum(args.system)
    print(_dump(verdict(datum, args.p, args.lam, args.mu).to_json(datum, args.p, args.lam, args.mu)))
    return EXIT_OK


CSV_HEADER = ["system", "p", "la", "lb", "ma", "mb", "cr", "mf", "rows"]


def emit_records(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for r in records:
            out.write(_dump(r) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r["system"], r["p"], *r["lambda"], *r["mu"], int(r["cr"]), int(r["mf"]), ";".join(r["rows"])])


def cmd_verify(args) -> int:
    cache_path = os.environ.get("MODTENSOR_CACHE") or args.cache
    cache.load(cache_path)
    reports, records = [], []
    for p in args.p:
        report, recs = sweep(args.system, p, workers=args.workers)
        reports.append(report)
        records.extend(recs)
        status = "ok" if report.ok else f"{len(report.mismatches)} MISMATCHES"
        print(f"{report.system} p={p}: {report.pairs_total} pairs, oracle MF {report.mf_oracle_true}, "
              f"table MF {report.mf_table_true}, {status} ({report.elapsed:.1f}s)", file=sys.stderr)
        for m in report.mismatches:
            print("  mismatch " + _dump(m), file=sys.stderr)
    if args.emit:
        if args.out:
            with open(args.out, "w") as fh:
                emit_records(records, args.emit, fh)
        else:
            emit_records(records, args.emit, sys.stdout)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=1, sort_keys=True)
    if cache_path:
        cache.save(cache_path)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


def cmd_fusion(args) -> int:
    datum = get_datum(args.system)
    p = args.p
    weights = c0_weights(datum, p)
    table = {(lam, mu): fusion_product(datum, p, lam, mu) for lam in weights for mu in weights}
    bad = 0
    rows = []
    for (lam, mu), prod in sorted(table.items()):
        for nu, c in sorted(prod.items()):
            rows.append([*lam, *mu, *nu, c])
            if c != table[(nu, dual_weight(datum, mu))].get(lam, 0):
                bad += 1
            if datum.id.value == "B2" and c != table[(al.omega_dot_b2(p, lam), mu)].get(al.omega_dot_b2(p, nu), 0):
                bad += 1
            if c > klimyk_char0(datum, lam, mu).get(nu, 0):
                bad += 1
    print(_dump({"system": datum.name, "p": p, "c0": [list(w) for w in weights],
                 "coefficients": rows, "identity_failures": bad}))
    return EXIT_MISMATCH if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modtensor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, prime=True):
        sp.add_argument("--system", "-s", type=_system, required=True, help="a2 or b2")
        if prime:
            sp.add_argument("-p", "--prime", dest="p", type=_prime, required=True)

    sp = sub.add_parser("character", help="character of L(weight), or of the Weyl module with --weyl")
    common(sp)
    sp.add_argument("--weight", "-w", type=_weight, required=True)
    sp.add_argument("--weyl", action="store_true")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_character)

    sp = sub.add_parser("decompose", help="composition factors of L(lambda) (x) L(mu)")
    common(sp)
    sp.add_argument("--lambda", "-l", dest="lam", type=_weight, required=True)
    sp.add_argument("--mu", "-m", type=_weight, required=True)
    sp.add_argument("--method", choices=("oracle", "theorem-b", "minuscule"), default="oracle")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("classify", help="table verdict (CR, MF) for a pair of dominant weights")
    common(sp)
    sp.add_argument("--lambda", "-l", dest="lam", type=_weight, required=True)
    sp.add_argument("--mu", "-m", type=_weight, required=True)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="sweep all restricted pairs and check tables against the oracle")
    common(sp, prime=False)
    sp.add_argument("-p", "--prime", dest="p", type=_prime, nargs="+", required=True)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--cache", help="JSON memo of simple characters (MODTENSOR_CACHE overrides)")
    sp.add_argument("--emit", choices=("csv", "json"), help="print per-pair verdicts")
    sp.add_argument("--out", help="write emitted records here instead of stdout")
    sp.add_argument("--report", help="write the sweep reports as JSON")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("fusion", help="Verlinde coefficients on C0 with identity checks")
    common(sp)
    sp.set_defaults(func=cmd_fusion)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be positive")
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
