#!/usr/bin/env python3
"""Census of rotation-invariant forests, one row per nonempty (n, k, d) cell.

Counts each cell three ways (orbit-level search, filtering the full
enumeration, constructing the fixed set from quotient data) and insists the
answers match. Mostly useful as a timing comparison between the routes.

    python3 scripts/bijection_census.py --max-n 12
"""

import argparse
import sys
import time

from ncfsieve.enumeration import count_invariant, divisors, enumerate_invariant


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--skip-filter-above", type=int, default=10,
                    help="full-enumeration route is skipped for larger n")
    args = ap.parse_args()

    tot = {"orbit": 0.0, "filter": 0.0, "bijection": 0.0}
    print(f"{'n':>3} {'k':>3} {'d':>3} {'count':>8} {'orbit':>8} "
          f"{'filter':>8} {'biject':>8}")
    for n in range(2, args.max_n + 1):
        for k in range(1, n + 1):
            for d in (dd for dd in divisors(n) if dd >= 2):
                orbit, t_o = timed(
                    lambda: sum(1 for _ in enumerate_invariant(n, k, d))
                )
                tot["orbit"] += t_o
                if n <= args.skip_filter_above:
                    filt, t_f = timed(lambda: count_invariant(n, k, d))
                    assert filt == orbit, (n, k, d)
                    f_col = f"{t_f:>7.2f}s"
                    tot["filter"] += t_f
                else:
                    f_col = "      ."
                bij, t_b = timed(
                    lambda: sum(
                        1 for _ in enumerate_invariant(n, k, d, method="bijection")
                    )
                )
                tot["bijection"] += t_b
                assert bij == orbit, (n, k, d)
                if orbit:
                    print(f"{n:>3} {k:>3} {d:>3} {orbit:>8} {t_o:>7.2f}s "
                          f"{f_col} {t_b:>7.2f}s")

    print(f"\ntotals: orbit {tot['orbit']:.1f}s, filter {tot['filter']:.1f}s "
          f"(n<={args.skip_filter_above}), bijection {tot['bijection']:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
