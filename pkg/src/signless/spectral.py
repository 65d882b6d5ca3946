"""Signless Laplacian matrices and a cyclic Jacobi eigensolver.

The solver works on dense real symmetric matrices and is deterministic:
pivots are visited in row-major order ``(0,1), (0,2), ..., (n-2,n-1)``
every sweep, and a sweep starts only while the off-diagonal Frobenius
norm exceeds ``tol * ||M||_F``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import njit

from ._canon import decode
from .graphcore import Graph, make_star_k2_complement

MAX_SWEEPS = 100
DEFAULT_TOL = 1e-12


class ConvergenceError(RuntimeError):
    pass


class SymMatrix:
    """Real symmetric matrix; symmetry is checked exactly on construction."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not exactly symmetric")
        a.setflags(write=False)
        self._a = a

    @property
    def order(self) -> int:
        return self._a.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._a

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        if self.order != other.order:
            raise ValueError("order mismatch")
        return SymMatrix(self._a + other._a)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymMatrix) and np.array_equal(self._a, other._a)

    def __repr__(self) -> str:
        return f"SymMatrix(order={self.order})"


@dataclass
class Spectrum:
    values: np.ndarray
    vectors: Optional[np.ndarray]
    max_residual: float
    sweeps: int = 0

    @property
    def q1(self) -> float:
        return float(self.values[0])

    @property
    def qn(self) -> float:
        return float(self.values[-1])

    def to_dict(self, vectors: bool = False) -> dict:
        d = {
            "values": [float(x) for x in self.values],
            "max_residual": float(self.max_residual),
            "sweeps": self.sweeps,
        }
        if vectors and self.vectors is not None:
            # column i pairs with values[i]; emitted row-wise per eigenpair
            d["vectors"] = [[float(x) for x in self.vectors[:, i]]
                            for i in range(self.vectors.shape[1])]
        return d


@njit(cache=True)
def _jacobi(a, tol, max_sweeps, want_vectors):
    """In-place cyclic Jacobi; returns (diag, V, sweeps, converged)."""
    n = a.shape[0]
    v = np.eye(n)
    norm = 0.0
    for i in range(n):
        for j in range(n):
            norm += a[i, j] * a[i, j]
    norm = math.sqrt(norm)
    thresh = tol * norm
    sweeps = 0
    converged = False
    while True:
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += 2.0 * a[i, j] * a[i, j]
        if math.sqrt(off) <= thresh:
            converged = True
            break
        if sweeps >= max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    x = c * akp - s * akq
                    y = s * akp + c * akq
                    a[k, p] = x
                    a[p, k] = x
                    a[k, q] = y
                    a[q, k] = y
                if want_vectors:
                    for k in range(n):
                        vkp = v[k, p]
                        vkq = v[k, q]
                        v[k, p] = c * vkp - s * vkq
                        v[k, q] = s * vkp + c * vkq
    d = np.empty(n)
    for i in range(n):
        d[i] = a[i, i]
    return d, v, sweeps, converged


@njit(cache=True)
def _q_rows(adj, n):
    q = np.zeros((n, n))
    for i in range(n):
        row = adj[i]
        deg = 0
        for j in range(n):
            if (row >> j) & 1:
                q[i, j] = 1.0
                deg += 1
        q[i, i] = deg
    return q


@njit(cache=True)
def extremes_from_certs(certs, n, tol, max_sweeps):
    """(q1, qn, converged) for every graph packed in ``certs``."""
    b = certs.shape[0]
    q1 = np.empty(b)
    qn = np.empty(b)
    ok = np.ones(b, np.bool_)
    for i in range(b):
        a = _q_rows(decode(certs[i], n), n)
        d, _, _, conv = _jacobi(a, tol, max_sweeps, False)
        q1[i] = d.max()
        qn[i] = d.min()
        ok[i] = conv
    return q1, qn, ok


def signless_laplacian(g: Graph) -> SymMatrix:
    q = np.zeros((g.n, g.n))
    for i, row in enumerate(g.adj):
        for j in range(g.n):
            if (row >> j) & 1:
                q[i, j] = 1.0
        q[i, i] = row.bit_count()
    return SymMatrix(q)


def eigen_sym(m: SymMatrix, tol: float = DEFAULT_TOL) -> Spectrum:
    """Full eigendecomposition, eigenvalues sorted nonincreasing."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(m.entries, dtype=np.float64, copy=True)
    d, v, sweeps, ok = _jacobi(a, tol, MAX_SWEEPS, True)
    if not ok:
        raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
    order = np.argsort(-d, kind="stable")
    values = d[order]
    vectors = v[:, order]
    resid = np.linalg.norm(m.entries @ vectors - vectors * values, axis=0)
    return Spectrum(values, vectors, float(resid.max(initial=0.0)), int(sweeps))


def spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigen_sym(signless_laplacian(g), tol)


def q_extremes(g: Graph, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    s = spectrum(g, tol)
    return s.q1, s.qn


def rayleigh_residual(m: SymMatrix, value: float, vector) -> float:
    x = np.asarray(vector, dtype=np.float64)
    nrm = np.linalg.norm(x)
    if nrm == 0.0:
        raise ValueError("zero vector has no residual")
    return float(np.linalg.norm(m.entries @ x - value * x) / nrm)


# -- reduced system for the complement of K_{1,n-3} + K_2 -------------------

def _star_k2_system(n: int) -> list[list[np.polynomial.Polynomial]]:
    """Coefficient matrix, linear in q, of the eigen-equations in x1, x2, x4.

    Rows are the equations at the star centre, at a star leaf and at a
    K_2 end vertex, with x2 = x3 and x4 = ... = xn substituted.
    """
    P = np.polynomial.Polynomial
    return [
        [P([-2, 1]), P([-2]), P([0])],
        [P([0]), P([2]), P([2 * n - 6, -1])],
        [P([1]), P([n - 2, -1]), P([n - 3])],
    ]


def reduced_star_k2_cubic(n: int) -> np.ndarray:
    """Monic cubic (coefficients highest degree first) whose roots are the q
    admitting a nontrivial symmetric solution of the reduced system."""
    if n < 5:
        raise ValueError("reduced system needs n >= 5")
    a = _star_k2_system(n)
    det = (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
           - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
           + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    c = det.trim().coef
    return (c / c[-1])[::-1]


def _polish(coeffs, lo, hi, iters=200):
    f = np.poly1d(coeffs)
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0 or hi - lo < 1e-14:
            lo = hi = mid
            break
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    df = f.deriv()
    for _ in range(5):
        d = df(x)
        if d == 0.0:
            break
        step = f(x) / d
        x -= step
        if abs(step) < 1e-15:
            break
    return x


def cubic_real_roots(coeffs, lo: float, hi: float) -> list[float]:
    """Real roots in [lo, hi] by bisection on monotone brackets plus Newton.

    Brackets are cut at the critical points of the cubic so each piece
    holds at most one simple root.
    """
    f = np.poly1d(coeffs)
    a, b, c, _ = coeffs
    cuts = [lo, hi]
    disc = (2 * b) ** 2 - 4 * (3 * a) * c
    if disc > 0:
        r = math.sqrt(disc)
        for x in ((-2 * b - r) / (6 * a), (-2 * b + r) / (6 * a)):
            if lo < x < hi:
                cuts.append(x)
    cuts.sort()
    roots = []
    for x0, x1 in zip(cuts, cuts[1:]):
        f0, f1 = f(x0), f(x1)
        if f0 == 0.0:
            roots.append(x0)
        elif (f0 < 0) != (f1 < 0):
            roots.append(_polish(coeffs, x0, x1))
    if f(cuts[-1]) == 0.0:
        roots.append(cuts[-1])
    out = []
    for x in roots:
        if not out or abs(x - out[-1]) > 1e-12:
            out.append(x)
    return out


def star_k2_cubic_roots(n: int) -> list[float]:
    return cubic_real_roots(reduced_star_k2_cubic(n), 0.0, 2.0 * n)


def star_k2_symmetry(n: int, tol: float = DEFAULT_TOL) -> dict:
    """Eigenvector symmetry on the complement of K_{1,n-3} + K_2.

    Returns the least eigenvalue, its gap to the next one, and the
    deviations |x2 - x3| and max |x_i - x_j| over the star leaves
    (0-based vertices 1, 2 and 3..n-1).
    """
    g = make_star_k2_complement(n)
    s = spectrum(g, tol)
    x = s.vectors[:, -1]
    if x[np.argmax(np.abs(x))] < 0:
        x = -x
    leaves = x[3:]
    return {
        "qn": s.qn,
        "gap": float(s.values[-2] - s.values[-1]),
        "x23": float(abs(x[1] - x[2])),
        "leaves": float(leaves.max() - leaves.min()),
        "vector": x,
    }

