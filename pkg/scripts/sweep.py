"""Exhaustive sweep of both bounds over connected classes.

    python scripts/sweep.py --n 3..9 --jobs 4
"""

import argparse
import time

from signless.cli import parse_range
from signless.enumeration import EnumSpec, warm_kernels
from signless.verify import verify_bound


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=parse_range, default=parse_range("3..9"))
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    t = time.perf_counter()
    warm_kernels()
    print(f"# kernels loaded in {time.perf_counter() - t:.1f}s")
    print(f"{'n':>2} {'bound':>10} {'classes':>8} {'viol':>5} {'min slack':>12}  argmin    secs")
    for n in args.n:
        for kind in ("conjecture", "theorem"):
            run = verify_bound(EnumSpec(n, True), kind, jobs=args.jobs)
            print(f"{n:>2} {kind:>10} {run.count:>8} {len(run.violations):>5} {run.min_slack:12.6f}"
                  f"  {run.argmin_graph6:<9} {run.elapsed:.2f}")


if __name__ == "__main__":
    main()
