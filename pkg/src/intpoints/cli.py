"""Command-line front end: ``intpoints <command> ...``.

Exit codes: 0 success, 1 I/O failure, 2 usage or parse error, 3 invalid curve.
"""
from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path

from . import selfdesc
from .curve import Curve, format_curve, format_point, pretty_curve, reduce, SingularCurveError
from .points import enumerate_integral_points
from .search import (SearchConfig, SearchStats, integral_multiples, param_names, rank_records,
                     read_jsonl, render_table, run_search, write_jsonl, write_meta)

EXIT_IO = 1
EXIT_USAGE = 2
EXIT_CURVE = 3

_NEG_CURVE = re.compile(r"^-\d+([,:]-?\d+)*$")
_RANGE = re.compile(r"^\s*(\w+)\s*=\s*(-?\d+)\s*:\s*(-?\d+)\s*$")


class UsageError(Exception):
    pass


class CurveError(Exception):
    pass


def _curve(text: str) -> Curve:
    try:
        return Curve.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _digits(text: str):
    try:
        return selfdesc.parse_digits(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_ranges(specs: list[str], family: int) -> dict[str, tuple[int, int]]:
    """``["u=-6:6", "v=0:3", "p=-6:6"]`` -> {"u": (-6, 6), ...}.  A bare ``-6:6`` applies to every parameter."""
    names = param_names(family)
    ranges: dict[str, tuple[int, int]] = {}
    for item in specs:
        for part in item.split(","):
            m = _RANGE.match(part)
            if m:
                name, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
                if name not in names:
                    raise UsageError(f"unknown parameter {name!r} for family {family} (expected {', '.join(names)})")
                ranges[name] = (lo, hi)
                continue
            m = re.match(r"^\s*(-?\d+)\s*:\s*(-?\d+)\s*$", part)
            if not m:
                raise UsageError(f"bad range {part!r}; use NAME=LO:HI or LO:HI")
            for name in names:
                ranges.setdefault(name, (int(m.group(1)), int(m.group(2))))
    missing = [n for n in names if n not in ranges]
    if missing:
        raise UsageError(f"missing range for {', '.join(missing)}")
    return ranges


def cmd_check(args) -> int:
    E = _curve(args.curve)
    if E.e != 0:
        raise CurveError(f"(0,0) is not on {format_curve(E)}: e must be 0")
    found, torsion = integral_multiples(E, args.nmax)
    print(",".join(map(str, found)))
    if torsion is not None:
        print(f"torsion order: {torsion}")
    return 0


def cmd_search(args) -> int:
    cfg = SearchConfig(family=args.family, ranges=parse_ranges(args.range, args.family),
                       nmax=args.nmax, min_n=args.min_n, out=Path(args.out), workers=args.workers)
    try:
        cfg.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    stats = SearchStats()
    n = write_jsonl(run_search(cfg, stats), cfg.out)
    if args.meta:
        write_meta(cfg, stats, Path(str(cfg.out) + ".meta.json"))
    rej = ", ".join(f"{k}={v}" for k, v in sorted(stats.rejected.items())) or "none"
    print(f"scanned {stats.scanned} parameter tuples: rejected [{rej}], torsion {stats.torsion}, "
          f"below threshold {stats.below_threshold}, duplicates {stats.duplicates}")
    print(f"wrote {n} candidates to {cfg.out}")
    return 0


def cmd_report(args) -> int:
    try:
        records = read_jsonl(Path(args.input))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(render_table(rank_records(records, args.rank, args.top)))
    return 0


def cmd_enum(args) -> int:
    E = _curve(args.curve)
    pts = enumerate_integral_points(E, args.bound)
    for P in pts:
        print(format_point(P))
    print(f"bounded count (|x| <= {args.bound}): {len(pts)}")
    return 0


def cmd_reduce(args) -> int:
    E = _curve(args.curve)
    if not any(E.coeffs):
        raise CurveError("cannot reduce the all-zero curve")
    g, R = reduce(E)
    print(f"g={g}")
    print(f"reduced: {format_curve(R)}")
    print(f"         {pretty_curve(R)}")
    return 0


def cmd_selfdesc(args) -> int:
    if args.action == "search":
        rows = [(n, b) for n in range(1, args.max_len + 1) for b in selfdesc.search_solutions(n)]
        width = max([len("b")] + [len(selfdesc.render(b)) for _, b in rows])
        print(f"L(b) | {'b':<{width}} | Classification")
        for n, b in rows:
            print(f"{n:>4} | {selfdesc.render(b):<{width}} | {selfdesc.classify(b).label}")
    elif args.action == "classify":
        print(selfdesc.classify(_digits(args.digits)).value)
    elif args.action in ("extend", "contract"):
        fn = getattr(selfdesc, args.action)
        try:
            print(selfdesc.render(fn(_digits(args.digits))))
        except selfdesc.NotExtendableError as exc:
            raise UsageError(str(exc)) from None
    elif args.action == "formula":
        try:
            print(selfdesc.render(selfdesc.closed_form(args.length)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="intpoints", description="Integral multiples on elliptic curves "
                                 "and self-descriptive numbers.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="integral multiples of (0,0) on a curve a,b,c,d,e")
    p.add_argument("curve")
    p.add_argument("--nmax", type=int, default=35)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="sweep a curve family and write candidates as JSONL")
    p.add_argument("--family", type=int, choices=(5, 8), required=True)
    p.add_argument("--range", action="append", default=[], metavar="NAME=LO:HI",
                   help="inclusive parameter range; repeat or comma-separate; LO:HI alone sets all")
    p.add_argument("--nmax", type=int, default=35)
    p.add_argument("--min-n", type=int, default=15)
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--meta", action="store_true", help="also write OUT.meta.json with config and counts")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("report", help="rank a candidate file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--rank", choices=("highest", "count"), default="highest")
    p.add_argument("--top", type=int, default=40)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("enum", help="integral points with |x| <= bound")
    p.add_argument("--curve", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("reduce", help="scale factor g and reduced curve")
    p.add_argument("--curve", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("selfdesc", help="self-descriptive numbers")
    ssub = p.add_subparsers(dest="action", required=True)
    q = ssub.add_parser("search")
    q.add_argument("--max-len", type=int, required=True)
    for name in ("classify", "extend", "contract"):
        ssub.add_parser(name).add_argument("digits")
    q = ssub.add_parser("formula")
    q.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_selfdesc)
    return ap


def _protect_negative_curves(argv: list[str]) -> list[str]:
    # argparse reads "-17,-30,960,0,0" or "-6:6" as an option; a leading space keeps it positional
    return [" " + a if _NEG_CURVE.match(a) else a for a in argv]


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_protect_negative_curves(argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "bound", 0) < 0:
        print("error: bound must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CurveError, SingularCurveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CURVE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
