"""Least theorem slack per edge surplus r = m - C(n-1, 2) in the dense regime."""

import sys

from signless.verify import min_slack_by_surplus


def main(nmax=9):
    for n in range(6, nmax + 1):
        for r, (slack, g6) in sorted(min_slack_by_surplus(n).items()):
            print(f"n={n} r={r:>2} min_slack={slack:.6f} {g6}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 9)
