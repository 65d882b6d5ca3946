"""Closed-form eigenvalue bounds for the signless Laplacian.

Bounds with integer inputs are evaluated in exact rational arithmetic and
rounded once.  Square-root bounds use the rationalised form
``4ab / (s + sqrt(s^2 - 8ab))`` to avoid cancellation when the two terms
of the difference are close.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .graphcore import DegreeProfile, Graph, count_edges, degree_profile
from .spectral import SymMatrix, eigen_sym

TOL = 1e-9


def conjecture_bound(n: int, m: int) -> float:
    """2m/(n-1) - n + 2."""
    if n < 2:
        raise ValueError("conjecture bound needs n >= 2")
    return float(Fraction(2 * m, n - 1) - n + 2)


def theorem_bound(n: int, m: int) -> float:
    """2m/(n-2) - n + 1."""
    if n < 3:
        raise ValueError("theorem bound needs n >= 3")
    return float(Fraction(2 * m, n - 2) - n + 1)


def bound(kind: str, n: int, m: int) -> float:
    if kind == "theorem":
        return theorem_bound(n, m)
    if kind == "conjecture":
        return conjecture_bound(n, m)
    raise ValueError(f"unknown bound kind {kind!r}")


def surplus(n: int, m: int) -> int:
    """r = m - (n-1)(n-2)/2; the theorem reads q_n >= 2r/(n-2) in terms of r."""
    return m - (n - 1) * (n - 2) // 2


def tau(n: int) -> float:
    """Least signless Laplacian eigenvalue of K_n minus one edge.

    (3n - 6 - sqrt((n-2)(n+6))) / 2, rationalised.
    """
    if n < 3:
        raise ValueError("tau needs n >= 3")
    s = 3 * n - 6
    return 4 * (n - 2) * (n - 3) / (s + math.sqrt((n - 2) * (n + 6)))


def merris_q1_upper(g: Graph) -> float:
    """max over non-isolated u of d(u) + (sum of neighbour degrees) / d(u).

    Isolated vertices are skipped, so an edgeless graph gets 0.
    """
    degs = [row.bit_count() for row in g.adj]
    best = Fraction(0)
    for u, row in enumerate(g.adj):
        if degs[u] == 0:
            continue
        s = sum(degs[v] for v in range(g.n) if (row >> v) & 1)
        best = max(best, degs[u] + Fraction(s, degs[u]))
    return float(best)


def edge_degree_q1_upper(g: Graph) -> int:
    """max over edges uv of d(u) + d(v)."""
    degs = [row.bit_count() for row in g.adj]
    edges = g.edges()
    if not edges:
        raise ValueError("edge-degree bound needs at least one edge")
    return max(degs[u] + degs[v] for u, v in edges)


def lemma23_lower(n: int, k: int) -> float:
    """(s - sqrt(s^2 - 8k(k-1))) / 2 with s = n + 2k - 2.

    Stated for graphs other than K_n with k vertices of full degree; zero
    for k in {0, 1}.
    """
    if n < 1 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    p = 8 * k * (k - 1)
    if p == 0:
        return 0.0
    s = n + 2 * k - 2
    return p / (2 * (s + math.sqrt(s * s - p)))


def lemma24_applicable(profile: DegreeProfile, n: int) -> bool:
    return profile.k in (1, 2) and profile.c_nm2 >= 1 and n >= 7


def lemma24_lower(n: int, k: int) -> float:
    """2k/(n-2), for k in {1, 2}."""
    if k not in (1, 2):
        raise ValueError(f"bound 2k/(n-2) is stated only for k in {{1, 2}}, got {k}")
    return float(Fraction(2 * k, n - 2))


def weyl_min_sum(a: SymMatrix, b: SymMatrix) -> tuple[float, float]:
    """(lambda_min(A+B), lambda_max(A) + lambda_min(B)); lhs <= rhs holds."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    lhs = eigen_sym(a + b).values[-1]
    sa = eigen_sym(a).values
    sb = eigen_sym(b).values
    return float(lhs), float(sa[0] + sb[-1])


@dataclass
class BoundReport:
    n: int
    m: int
    r: int
    k: int
    qn: float
    q1: float
    conj_bound: float
    thm_bound: float
    conj_slack: float
    thm_slack: float
    merris_upper: float
    lemma23_lower: float
    lemma24_applicable: bool
    lemma24_lower: Optional[float]
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(g: Graph, q1: float, qn: float) -> BoundReport:
    """Evaluate every bound on ``g`` given its extreme eigenvalues."""
    n = g.n
    if n < 3:
        raise ValueError("bound report needs n >= 3")
    m = count_edges(g)
    prof = degree_profile(g)
    cb = conjecture_bound(n, m)
    tb = theorem_bound(n, m)
    warnings = []
    if prof.k == n:
        warnings.append("lemma23: hypothesis G != K_n not met; bound not valid here")
    app = lemma24_applicable(prof, n)
    return BoundReport(
        n=n, m=m, r=surplus(n, m), k=prof.k, qn=qn, q1=q1,
        conj_bound=cb, thm_bound=tb,
        conj_slack=qn - cb, thm_slack=qn - tb,
        merris_upper=merris_q1_upper(g),
        lemma23_lower=lemma23_lower(n, prof.k),
        lemma24_applicable=app,
        lemma24_lower=lemma24_lower(n, prof.k) if app else None,
        warnings=warnings,
    )
