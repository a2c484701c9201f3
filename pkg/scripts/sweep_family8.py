"""Sweep family-8 parameters over a symmetric box and summarize what reduction does.

For each emitted candidate, reports whether 1P..8P survive on the reduced
curve (they are always integral on the family curve itself).
"""
import argparse
from collections import Counter

from intpoints.families import family8
from intpoints.search import SearchConfig, SearchStats, integral_multiples, rank_records, render_table, run_search


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=6)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--top", type=int, default=10)
    args = ap.parse_args(argv)

    cfg = SearchConfig(family=8, ranges={k: (-args.bound, args.bound) for k in "uvp"}, workers=args.workers)
    stats = SearchStats()
    records = list(run_search(cfg, stats))
    print(stats.to_json())

    g_hist = Counter(r.g for r in records)
    lost = [r for r in records if not set(range(1, 9)) <= set(r.multiples)]
    for r in lost:
        unreduced, _ = integral_multiples(family8(r.params).curve, cfg.nmax)
        assert set(range(1, 9)) <= set(unreduced)
    print(f"{len(records)} candidates, g histogram {dict(sorted(g_hist.items()))}")
    print(f"{len(lost)} lose some of 1P..8P after reduction")
    print()
    print(render_table(rank_records(records, "highest", args.top)))


if __name__ == "__main__":
    main()
