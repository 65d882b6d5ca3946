"""Least eigenvalue of K_n minus an edge against both bounds, n = 3..12."""

from signless import bounds as B
from signless.graphcore import make_complete_minus_edge
from signless.spectral import spectrum


def main():
    print(f"{'n':>3} {'tau':>12} {'eigensolver':>12} {'conj':>10} {'thm':>10}")
    for n in range(3, 13):
        m = n * (n - 1) // 2 - 1
        qn = spectrum(make_complete_minus_edge(n)).qn
        thm = B.theorem_bound(n, m)
        print(f"{n:>3} {B.tau(n):12.9f} {qn:12.9f} {B.conjecture_bound(n, m):10.6f} {thm:10.6f}")


if __name__ == "__main__":
    main()
