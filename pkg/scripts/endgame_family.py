"""Complement of K_{1,n-3} + K_2: reduced cubic against the full eigensolver."""

from signless.graphcore import make_star_k2_complement
from signless.spectral import spectrum, star_k2_cubic_roots, star_k2_symmetry


def main():
    print(f"{'n':>3} {'cubic root':>14} {'q_n':>14} {'|diff|':>9} {'2/(n-2)':>9} {'gap':>7}")
    for n in range(8, 17):
        root = star_k2_cubic_roots(n)[0]
        qn = spectrum(make_star_k2_complement(n)).qn
        sym = star_k2_symmetry(n)
        print(f"{n:>3} {root:14.10f} {qn:14.10f} {abs(root - qn):9.1e} {2 / (n - 2):9.5f} {sym['gap']:7.3f}")


if __name__ == "__main__":
    main()
