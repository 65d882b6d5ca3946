"""Exhaustive verification of the least-eigenvalue bounds and a proof audit.

Sweeps run over canonical class representatives from
:mod:`signless.enumeration`.  Work is sharded by parent class; each shard
returns a partial summary and shards merge with ``min`` on
``(slack, graph6)``, which is associative and so independent of the
number of workers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import bounds as B
from .enumeration import EnumSpec, cert_to_graph6, extend_chunk, iter_graphs, chunk_parents, pool
from .graphcore import Graph, complement, count_edges, degree_profile, from_graph6, to_graph6
from .spectral import DEFAULT_TOL, MAX_SWEEPS, ConvergenceError, extremes_from_certs, q_extremes, spectrum

CONFIRM_TOL = 1e-13


@dataclass
class Violation:
    graph6: str
    qn: float
    bound: float
    slack: float

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "qn": self.qn, "bound": self.bound, "slack": self.slack}


@dataclass
class VerifyRun:
    spec: EnumSpec
    bound_kind: str
    count: int
    min_slack: float
    argmin_graph6: Optional[str]
    violations: list[Violation]
    tol: float
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> tuple:
        """Everything except timing; equal for equal specs at any worker count."""
        return (self.spec, self.bound_kind, self.count, self.min_slack,
                self.argmin_graph6, tuple((v.graph6, v.qn, v.bound, v.slack) for v in self.violations),
                self.tol)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "bound_kind": self.bound_kind,
            "count": self.count,
            "min_slack": self.min_slack,
            "argmin_graph6": self.argmin_graph6,
            "violations": [v.to_dict() for v in self.violations],
            "tol": self.tol,
            "elapsed": self.elapsed,
        }


def check_graph(g: Graph, tol: float = DEFAULT_TOL) -> B.BoundReport:
    """Every bound of :mod:`signless.bounds` evaluated on ``g``."""
    q1, qn = q_extremes(g, tol)
    return B.bound_report(g, q1, qn)


@dataclass
class _Partial:
    count: int = 0
    min_slack: float = float("inf")
    argmin: Optional[str] = None
    # candidates only; confirmed after the merge
    violations: list = field(default_factory=list)

    def merge(self, other: "_Partial") -> "_Partial":
        out = _Partial(self.count + other.count, self.min_slack, self.argmin,
                       self.violations + other.violations)
        if other.argmin is not None and (out.argmin is None or
                                         (other.min_slack, other.argmin) < (out.min_slack, out.argmin)):
            out.min_slack, out.argmin = other.min_slack, other.argmin
        return out


def _bound_table(kind: str, n: int) -> np.ndarray:
    return np.array([B.bound(kind, n, m) for m in range(n * (n - 1) // 2 + 1)])


def _sweep_chunk(args) -> _Partial:
    parents, spec, kind, tol = args
    n = spec.n
    certs = extend_chunk(parents, spec)
    if certs.size == 0:
        return _Partial()
    _, qn, ok = extremes_from_certs(certs, n, DEFAULT_TOL, MAX_SWEEPS)
    if not ok.all():
        raise ConvergenceError(f"eigensolver failed on {cert_to_graph6(int(certs[~ok][0]), n)}")
    m = np.array([int(c).bit_count() for c in certs])
    bnd = _bound_table(kind, n)[m]
    slack = qn - bnd
    lo = slack.min()
    # same-n graph6 strings order like their certificates, so the smallest
    # certificate among ties is the lexicographically smallest graph6
    tied = certs[slack == lo]
    part = _Partial(len(certs), float(lo), cert_to_graph6(int(tied.min()), n))
    for i in np.flatnonzero(slack < -tol):
        part.violations.append(cert_to_graph6(int(certs[i]), n))
    return part


def _confirm(g6: str, kind: str, tol: float) -> Optional[Violation]:
    g = from_graph6(g6)
    qn = spectrum(g, CONFIRM_TOL).qn
    b = B.bound(kind, g.n, count_edges(g))
    if qn - b < -tol:
        return Violation(g6, qn, b, qn - b)
    return None


def verify_bound(spec: EnumSpec, bound_kind: str = "theorem", tol: float = B.TOL,
                 jobs: int = 1) -> VerifyRun:
    """Check ``q_n >= bound`` on every class matching ``spec``."""
    min_n = 3 if bound_kind == "theorem" else 2
    if spec.n < min_n:
        raise ValueError(f"{bound_kind} bound needs n >= {min_n}")
    B.bound(bound_kind, spec.n, 0)
    t0 = time.perf_counter()
    if jobs <= 1:
        tasks = [(p, spec, bound_kind, tol) for p in chunk_parents(spec.n, 64)]
        parts = map(_sweep_chunk, tasks)
        total = _Partial()
        for p in parts:
            total = total.merge(p)
    else:
        tasks = [(p, spec, bound_kind, tol) for p in chunk_parents(spec.n, jobs * 8)]
        total = _Partial()
        with pool(jobs) as ex:
            for p in ex.map(_sweep_chunk, tasks):
                total = total.merge(p)
    violations = []
    for g6 in sorted(total.violations):
        v = _confirm(g6, bound_kind, tol)
        if v is not None:
            violations.append(v)
    violations.sort(key=lambda v: (v.slack, v.graph6))
    min_slack = total.min_slack if total.count else float("nan")
    return VerifyRun(spec, bound_kind, total.count, min_slack, total.argmin,
                     violations, tol, time.perf_counter() - t0)


def extremal_slack(n: int, m: int, bound_kind: str = "theorem") -> tuple[float, str]:
    """Least slack over connected classes with exactly ``m`` edges, and a witness."""
    if not 3 <= n <= 9:
        raise ValueError("extremal search supports 3 <= n <= 9")
    if not 0 <= m <= n * (n - 1) // 2:
        raise ValueError(f"m={m} outside 0..{n * (n - 1) // 2}")
    run = verify_bound(EnumSpec(n, True, m, m), bound_kind)
    if run.count == 0:
        raise ValueError(f"no connected graph on {n} vertices has {m} edges")
    return run.min_slack, run.argmin_graph6


# -- proof audit -------------------------------------------------------------

@dataclass
class AuditCheck:
    check_id: str
    lhs: float
    rhs: float
    passed: bool

    def to_dict(self) -> dict:
        return {"check_id": self.check_id, "lhs": self.lhs, "rhs": self.rhs, "passed": self.passed}


@dataclass
class ProofAudit:
    graph6: str
    n: int
    m: int
    r: int
    k: int
    checks: list[AuditCheck]
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "n": self.n, "m": self.m, "r": self.r, "k": self.k,
                "passed": self.passed, "checks": [c.to_dict() for c in self.checks],
                "skipped": list(self.skipped)}


def audit_graph(g: Graph, tol: float = B.TOL) -> ProofAudit:
    """Unconditional inequalities used along the proof, each stored as lhs <= rhs.

    a_weyl         n-2 - q_n(G) <= q_1(G^c)
    b_merris       q_1(G^c) <= Merris bound of G^c
    b_edge_degree  Merris bound of G^c <= max over edges of d(u)+d(v) in G^c
    b_edge_count   that maximum <= |E(G^c)| + 1
    b_identity     |E(G^c)| + 1 <= n - r   (an equality)
    c_lemma23      (s - sqrt(s^2 - 8k(k-1)))/2 <= q_n(G), G != K_n
    d_lemma24      2k/(n-2) <= q_n(G), when k in {1,2}, some degree n-2, n >= 7
    e_theorem      2r/(n-2) <= q_n(G)
    """
    n = g.n
    m = count_edges(g)
    r = B.surplus(n, m)
    prof = degree_profile(g)
    gc = complement(g)
    mc = count_edges(gc)
    _, qn = q_extremes(g)
    checks = []
    skipped = []

    def add(cid, lhs, rhs):
        checks.append(AuditCheck(cid, float(lhs), float(rhs), bool(lhs <= rhs + tol)))

    q1c = q_extremes(gc)[0]
    add("a_weyl", (n - 2) - qn, q1c)
    if mc:
        merris = B.merris_q1_upper(gc)
        edeg = B.edge_degree_q1_upper(gc)
        add("b_merris", q1c, merris)
        add("b_edge_degree", merris, edeg)
        add("b_edge_count", edeg, mc + 1)
        add("b_identity", mc + 1, n - r)
    else:
        skipped.append("b: complement has no edges")
    if prof.k < n:
        add("c_lemma23", B.lemma23_lower(n, prof.k), qn)
    else:
        skipped.append("c_lemma23: G is complete")
    if B.lemma24_applicable(prof, n):
        add("d_lemma24", B.lemma24_lower(n, prof.k), qn)
    else:
        skipped.append("d_lemma24: hypotheses not met")
    add("e_theorem", 2 * r / (n - 2), qn)
    return ProofAudit(to_graph6(g), n, m, r, prof.k, checks, skipped)


def critical_spec(n: int) -> EnumSpec:
    """Connected classes with m >= (n-1)(n-2)/2 + 1."""
    return EnumSpec(n, True, (n - 1) * (n - 2) // 2 + 1, None)


def audit_proof(n: int, tol: float = B.TOL) -> list[ProofAudit]:
    if not 6 <= n <= 9:
        raise ValueError("audit_proof supports 6 <= n <= 9")
    return [audit_graph(g, tol) for g in iter_graphs(critical_spec(n))]


def min_slack_by_surplus(n: int, bound_kind: str = "theorem") -> dict[int, tuple[float, str]]:
    """Least slack for each r = 1..n-1 over connected classes with m = (n-1)(n-2)/2 + r."""
    base = (n - 1) * (n - 2) // 2
    out = {}
    for r in range(1, n):
        run = verify_bound(EnumSpec(n, True, base + r, base + r), bound_kind)
        out[r] = (run.min_slack, run.argmin_graph6)
    return out
