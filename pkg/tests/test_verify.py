import math

import numpy as np
import pytest

from signless import bounds as B
from signless.enumeration import EnumSpec
from signless.graphcore import (from_graph6, make_complete, make_complete_minus_edge, make_cycle,
                                make_star_k2_complement, to_graph6)
from signless.verify import (audit_graph, audit_proof, check_graph, critical_spec, extremal_slack,
                             min_slack_by_surplus, verify_bound)

from conftest import numpy_eigvals

TAU4 = 3 - math.sqrt(5)
TAU5 = (9 - math.sqrt(33)) / 2
K5E = to_graph6(make_complete_minus_edge(5))


class TestCheckGraph:
    def test_k3(self):
        rep = check_graph(make_complete(3))
        assert rep.qn == pytest.approx(1.0, abs=1e-12)
        assert rep.thm_bound == 4.0
        assert rep.thm_slack == pytest.approx(-3.0, abs=1e-12)

    def test_k6_minus_edge(self):
        rep = check_graph(make_complete_minus_edge(6))
        assert rep.qn == pytest.approx(6 - 2 * math.sqrt(3), abs=1e-12)
        assert rep.thm_bound == 2.0
        assert rep.thm_slack == pytest.approx(4 - 2 * math.sqrt(3), abs=1e-12)

    def test_c6(self):
        rep = check_graph(make_cycle(6))
        assert abs(rep.qn) <= 1e-12
        assert rep.thm_bound == -2.0
        assert rep.thm_slack == pytest.approx(2.0, abs=1e-12)

    def test_small_n(self):
        with pytest.raises(ValueError):
            check_graph(make_complete(2))


class TestVerifyBound:
    def test_theorem_n6(self):
        run = verify_bound(EnumSpec(6, True), "theorem")
        assert run.count == 112 and run.ok and run.min_slack >= -1e-9

    def test_conjecture_n5(self):
        run = verify_bound(EnumSpec(5, True), "conjecture")
        assert run.count == 21 and run.ok

    def test_theorem_n5_fails_on_k5_minus_edge(self):
        run = verify_bound(EnumSpec(5, True), "theorem")
        assert not run.ok
        worst = run.violations[0]
        assert worst.graph6 == K5E
        assert worst.slack == pytest.approx(TAU5 - 2, abs=1e-9)
        assert run.min_slack == worst.slack and run.argmin_graph6 == K5E

    def test_conjecture_n4_fails_on_k4_minus_edge(self):
        run = verify_bound(EnumSpec(4, True), "conjecture")
        g6s = {v.graph6 for v in run.violations}
        assert to_graph6(make_complete_minus_edge(4)) in g6s
        v = next(v for v in run.violations if v.graph6 == to_graph6(make_complete_minus_edge(4)))
        assert v.slack == pytest.approx(TAU4 - 4 / 3, abs=1e-6)

    def test_run_invariants(self):
        for n, kind in [(4, "conjecture"), (5, "theorem"), (6, "theorem"), (3, "conjecture")]:
            run = verify_bound(EnumSpec(n, True), kind)
            assert bool(run.violations) == (run.min_slack < -run.tol)
            assert EnumSpec(n, True).matches(from_graph6(run.argmin_graph6))

    def test_violations_recheck_independently(self):
        run = verify_bound(EnumSpec(5, True), "theorem")
        for v in run.violations:
            g = from_graph6(v.graph6)
            qn = numpy_eigvals(g)[-1]
            assert qn - B.theorem_bound(g.n, len(g.edges())) < -run.tol

    def test_min_slack_matches_brute_force(self):
        from signless.enumeration import iter_graphs
        spec = EnumSpec(6, True)
        slacks = [numpy_eigvals(g)[-1] - B.theorem_bound(6, len(g.edges())) for g in iter_graphs(spec)]
        assert verify_bound(spec).min_slack == pytest.approx(min(slacks), abs=1e-9)

    def test_jobs_independent(self):
        spec = EnumSpec(7, True)
        assert verify_bound(spec, jobs=1).summary() == verify_bound(spec, jobs=3).summary()

    def test_edge_filtered(self):
        run = verify_bound(EnumSpec(6, True, 14, 14))
        assert run.count == 1
        assert run.argmin_graph6 == to_graph6(from_graph6(run.argmin_graph6))

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            verify_bound(EnumSpec(2), "theorem")
        with pytest.raises(ValueError):
            verify_bound(EnumSpec(5), "nonsense")


class TestExtremal:
    def test_n5_m9(self):
        slack, w = extremal_slack(5, 9, "theorem")
        assert w == K5E
        assert slack == pytest.approx(TAU5 - 2, abs=1e-9)

    def test_n6_m14(self):
        slack, w = extremal_slack(6, 14, "theorem")
        assert from_graph6(w).n == 6 and len(from_graph6(w).edges()) == 14
        assert slack == pytest.approx(B.tau(6) - 2, abs=1e-9)

    def test_n6_m15(self):
        slack, w = extremal_slack(6, 15, "theorem")
        assert w == to_graph6(make_complete(6))
        assert slack == pytest.approx(1.5, abs=1e-12)

    def test_no_connected_class(self):
        with pytest.raises(ValueError):
            extremal_slack(6, 3)
        with pytest.raises(ValueError):
            extremal_slack(10, 3)


class TestAudit:
    def test_star_k2_n8(self):
        a = audit_graph(make_star_k2_complement(8))
        assert (a.r, a.k) == (1, 0)
        e = next(c for c in a.checks if c.check_id == "e_theorem")
        assert e.lhs == pytest.approx(1 / 3) and e.passed
        assert a.passed

    def test_k8(self):
        a = audit_graph(make_complete(8))
        assert (a.m, a.r, a.k) == (28, 7, 8)
        ids = {c.check_id for c in a.checks}
        assert not any(i.startswith("b_") for i in ids)
        assert "c_lemma23" not in ids
        e = next(c for c in a.checks if c.check_id == "e_theorem")
        assert e.rhs == pytest.approx(6.0) and e.lhs == pytest.approx(14 / 6)
        assert a.passed

    def test_full_n6(self):
        audits = audit_proof(6)
        assert audits and all(a.passed for a in audits)
        assert all(a.r >= 1 for a in audits)

    def test_every_check_orientation(self):
        for a in audit_proof(7):
            for c in a.checks:
                assert c.passed == (c.lhs <= c.rhs + 1e-9)

    def test_domain(self):
        with pytest.raises(ValueError):
            audit_proof(5)

    def test_critical_spec(self):
        assert critical_spec(8).m_min == 22


def test_theorem_per_surplus_slice_n6():
    slices = min_slack_by_surplus(6)
    assert set(slices) == set(range(1, 6))
    assert all(s >= -1e-9 for s, _ in slices.values())
