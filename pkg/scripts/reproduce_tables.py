"""Recompute the integral multiples of (0,0) for every curve in the two known tables.

Multiples are computed on the reduced curve; rows whose printed curve is not
reduced are marked, together with the (larger) set found on the printed curve.
Exits non-zero if any row disagrees.
"""
import argparse
import sys
import time

from intpoints.curve import Curve, reduce
from intpoints.known import HIGHEST_MULTIPLE_TABLE, MOST_MULTIPLES_TABLE
from intpoints.search import integral_multiples

TABLES = {"highest": HIGHEST_MULTIPLE_TABLE, "most": MOST_MULTIPLES_TABLE}


def check_table(name, rows, nmax, verbose):
    bad = 0
    for coeffs, printed in rows:
        E = Curve(*coeffs)
        g, R = reduce(E)
        t0 = time.perf_counter()
        found, _ = integral_multiples(R, nmax)
        dt = time.perf_counter() - t0
        ok = found == printed
        bad += not ok
        note = ""
        if g > 1:
            direct, _ = integral_multiples(E, nmax)
            note = f"  g={g}, printed curve gives {','.join(map(str, direct))}"
        if verbose or not ok:
            status = "ok " if ok else "BAD"
            print(f"[{name}] {status} {coeffs[:3]}  {len(found):2d} multiples  {dt:.2f}s{note}")
    return bad


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--table", choices=[*TABLES, "all"], default="all")
    ap.add_argument("--nmax", type=int, default=35)
    ap.add_argument("-q", "--quiet", action="store_true", help="only print mismatches")
    args = ap.parse_args(argv)
    names = list(TABLES) if args.table == "all" else [args.table]
    bad = sum(check_table(n, TABLES[n], args.nmax, not args.quiet) for n in names)
    total = sum(len(TABLES[n]) for n in names)
    print(f"{total - bad}/{total} rows reproduced")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
