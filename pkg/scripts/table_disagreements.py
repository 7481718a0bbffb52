#!/usr/bin/env python3
"""Print every restricted pair where the MF table and the decomposition oracle disagree.

Each line shows the matched rows, the oracle decomposition, and a dimension check.
"""

import argparse

from modtensor.classify import restricted_verdict
from modtensor.rootdata import get_datum
from modtensor.simples import simple_character
from modtensor.tensor import tensor_simple_decomposition


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--system", default="B2", choices=["A2", "B2"])
    parser.add_argument("-p", type=int, nargs="+", default=[2, 3, 5, 7])
    args = parser.parse_args()
    datum = get_datum(args.system)
    for p in args.p:
        for la in range(p):
            for lb in range(p):
                for ma in range(la, p):
                    for mb in range(p):
                        lam, mu = (la, lb), (ma, mb)
                        if lam == (0, 0) or mu == (0, 0) or (ma == la and mb < lb):
                            continue
                        dec = tensor_simple_decomposition(datum, p, lam, mu)
                        v = restricted_verdict(datum, p, lam, mu)
                        if v.mf == dec.is_multiplicity_free():
                            continue
                        total = sum(m * simple_character(datum, p, nu).dim() for nu, m in dec.items())
                        expected = simple_character(datum, p, lam).dim() * simple_character(datum, p, mu).dim()
                        rows = ", ".join(m.label() for m in v.matched_rows) or "-"
                        print(f"{datum.name} p={p} {lam} x {mu}: rows [{rows}] oracle {dict(sorted(dec.items()))} "
                              f"dims {total}/{expected}")


if __name__ == "__main__":
    main()
