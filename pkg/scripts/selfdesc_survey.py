"""List all self-descriptive numbers up to a length and time the exhaustive search."""
import argparse
import time

from intpoints.selfdesc import classify, closed_form, render, search_solutions


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=30)
    args = ap.parse_args(argv)
    for n in range(1, args.max_len + 1):
        t0 = time.perf_counter()
        sols = search_solutions(n)
        dt = time.perf_counter() - t0
        shown = ", ".join(f"{render(b)} [{classify(b).label}]" for b in sols) or "-"
        tag = " (closed form only)" if n >= 7 and sols == [closed_form(n)] else ""
        print(f"n={n:3d}  {dt:7.3f}s  {shown}{tag}")


if __name__ == "__main__":
    main()
