#!/usr/bin/env python3
"""Sweep the fixed-point verification grid and print a table.

Every (n, k, d) cell with d | n is checked along all available routes:
brute-force filtering, polynomial evaluation at the root of unity, the
closed-form case split, and (for d >= 2) counting the image of the gluing
construction. Exits nonzero if any cell disagrees.

    python3 scripts/verify_grid.py --max-n 10
    python3 scripts/verify_grid.py --max-n 10 --workers 4
"""

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from ncfsieve.sieving import _verify_cell, verify_csp


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = []
    if args.workers > 1:
        cells = [(n, k, True) for n in range(1, args.max_n + 1)
                 for k in range(1, n + 1)]
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            for report in pool.map(_verify_cell, cells):
                rows.extend(report.rows)
    else:
        for n in range(1, args.max_n + 1):
            rows.extend(verify_csp(n).rows)

    header = f"{'n':>3} {'k':>3} {'d':>3} {'brute':>9} {'poly':>9} {'closed':>9} {'bij':>9}"
    print(header)
    print("-" * len(header))
    bad = 0
    for r in rows:
        bij = "." if r.bijection is None else str(r.bijection)
        flag = "" if r.agree else "  <-- MISMATCH"
        if not r.agree:
            bad += 1
        print(f"{r.n:>3} {r.k:>3} {r.d:>3} {r.brute:>9} {r.poly:>9} "
              f"{r.closed:>9} {bij:>9}{flag}")

    elapsed = time.perf_counter() - t0
    print(f"\n{len(rows)} cells in {elapsed:.1f}s", end=" ")
    if bad:
        print(f"with {bad} MISMATCHES")
        return 1
    print("and all routes agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())
