import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from signless import bounds as B
from signless.enumeration import EnumSpec, iter_graphs
from signless.graphcore import (Graph, complement, degree_profile, make_complete,
                                make_complete_minus_edge, make_star)
from signless.spectral import SymMatrix, signless_laplacian, spectrum

from conftest import graphs

TOL = 1e-9


class TestConjectureTheorem:
    def test_conjecture_values(self):
        assert B.conjecture_bound(5, 9) == 1.5
        assert B.conjecture_bound(2, 1) == 2.0
        assert B.conjecture_bound(4, 5) == pytest.approx(4 / 3, abs=1e-15)

    def test_theorem_values(self):
        assert B.theorem_bound(5, 9) == 2.0
        assert B.theorem_bound(6, 10) == 0.0
        assert B.theorem_bound(8, 22) == float(Fraction(1, 3))

    def test_domain(self):
        with pytest.raises(ValueError):
            B.conjecture_bound(1, 0)
        with pytest.raises(ValueError):
            B.theorem_bound(2, 1)
        with pytest.raises(ValueError):
            B.bound("other", 5, 3)

    def test_theorem_in_surplus_form(self):
        # 2m/(n-2) - n + 1 = 2r/(n-2) when m = (n-1)(n-2)/2 + r
        for n in range(4, 20):
            for r in range(0, n):
                m = (n - 1) * (n - 2) // 2 + r
                assert B.surplus(n, m) == r
                assert B.theorem_bound(n, m) == float(Fraction(2 * r, n - 2))

    def test_ordering(self):
        for n in range(4, 16):
            crit = Fraction((n - 1) * (n - 2), 2)
            for m in range(n * (n - 1) // 2 + 1):
                diff = Fraction(2 * m, n - 2) - Fraction(2 * m, n - 1) - 1
                assert B.theorem_bound(n, m) - B.conjecture_bound(n, m) == pytest.approx(float(diff), abs=1e-12)
                if m > crit:
                    assert B.theorem_bound(n, m) > B.conjecture_bound(n, m)
                elif m < crit:
                    assert B.theorem_bound(n, m) < B.conjecture_bound(n, m)
                else:
                    assert B.theorem_bound(n, m) == B.conjecture_bound(n, m) == 0.0


class TestTau:
    def test_values(self):
        assert B.tau(3) == 0.0
        assert B.tau(4) == pytest.approx(3 - math.sqrt(5), abs=1e-15)
        assert B.tau(5) == pytest.approx(1.6277186767309857, abs=1e-15)
        assert B.tau(6) == pytest.approx(6 - 2 * math.sqrt(3), abs=1e-15)

    def test_equals_textbook_form(self):
        for n in range(3, 40):
            assert B.tau(n) == pytest.approx(0.5 * (3 * n - 6 - math.sqrt((n - 2) * (n + 6))), abs=1e-12)

    @pytest.mark.parametrize("n", range(3, 13))
    def test_matches_eigensolver(self, n):
        assert abs(B.tau(n) - spectrum(make_complete_minus_edge(n)).qn) <= 1e-9

    def test_below_conjecture_small_n(self):
        assert B.tau(4) < B.conjecture_bound(4, 5)
        assert B.tau(3) < B.conjecture_bound(3, 2)

    def test_domain(self):
        with pytest.raises(ValueError):
            B.tau(2)


class TestMerris:
    def test_star(self):
        assert B.merris_q1_upper(make_star(3)) == 4.0

    @pytest.mark.parametrize("n", range(3, 9))
    def test_complete_tight(self, n):
        assert B.merris_q1_upper(make_complete(n)) == 2 * n - 2
        assert spectrum(make_complete(n)).q1 == pytest.approx(2 * n - 2, abs=1e-12)

    def test_edgeless(self):
        assert B.merris_q1_upper(Graph.empty(4)) == 0.0

    @given(graphs(max_n=12))
    def test_dominates_q1_and_below_edge_degree(self, g):
        mer = B.merris_q1_upper(g)
        assert spectrum(g).q1 <= mer + TOL
        if g.edges():
            assert mer <= B.edge_degree_q1_upper(g) + TOL


class TestEdgeDegree:
    def test_star_k2(self):
        for n in range(5, 12):
            g = Graph.from_edges(n, [(0, leaf) for leaf in range(3, n)] + [(1, 2)])
            assert B.edge_degree_q1_upper(g) == n - 2

    def test_k3(self):
        assert B.edge_degree_q1_upper(make_complete(3)) == 4

    def test_edgeless(self):
        with pytest.raises(ValueError):
            B.edge_degree_q1_upper(Graph.empty(3))

    def test_exhaustive_chain(self):
        for n in range(2, 8):
            for g in iter_graphs(EnumSpec(n)):
                if not g.edges():
                    continue
                q1 = spectrum(g).q1
                mer = B.merris_q1_upper(g)
                assert q1 <= mer + TOL <= B.edge_degree_q1_upper(g) + 2 * TOL


class TestLemma23:
    def test_zero_for_small_k(self):
        for n in range(2, 12):
            assert B.lemma23_lower(n, 0) == 0.0
            assert B.lemma23_lower(n, 1) == 0.0

    def test_tight_on_k5_minus_edge(self):
        assert B.lemma23_lower(5, 3) == pytest.approx((9 - math.sqrt(33)) / 2, abs=1e-15)
        assert abs(B.lemma23_lower(5, 3) - spectrum(make_complete_minus_edge(5)).qn) <= 1e-9

    def test_n8_k4(self):
        assert B.lemma23_lower(8, 4) == pytest.approx(2.0, abs=1e-15)

    def test_n8_k4_exhaustive(self):
        hits = 0
        for g in iter_graphs(EnumSpec(8, m_min=16)):
            p = degree_profile(g)
            if p.k == 4 and g.n != p.k:
                hits += 1
                assert spectrum(g).qn >= 2.0 - TOL
        assert hits > 0

    def test_textbook_form(self):
        for n in range(2, 15):
            for k in range(n + 1):
                s = n + 2 * k - 2
                assert B.lemma23_lower(n, k) == pytest.approx(0.5 * (s - math.sqrt(s * s - 8 * k * (k - 1))), abs=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            B.lemma23_lower(5, 6)
        with pytest.raises(ValueError):
            B.lemma23_lower(5, -1)


class TestLemma24:
    def test_values(self):
        assert B.lemma24_lower(8, 1) == pytest.approx(1 / 3, abs=1e-15)
        assert B.lemma24_lower(8, 2) == pytest.approx(2 / 3, abs=1e-15)

    def test_domain(self):
        with pytest.raises(ValueError):
            B.lemma24_lower(8, 3)

    def test_applicability(self):
        k3 = degree_profile(Graph.from_edges(7, [(i, j) for j in range(7) for i in range(j) if (i, j) not in {(3, 4), (5, 6)}]))
        assert k3.k == 3 and not B.lemma24_applicable(k3, 7)
        g = complement(Graph.from_edges(7, [(1, 2), (1, 3), (4, 5), (5, 6), (4, 6), (2, 3)]))
        p = degree_profile(g)
        assert p.k == 1 and p.c_nm2 == 0 and not B.lemma24_applicable(p, 7)
        g = complement(Graph.from_edges(7, [(1, 2), (3, 4), (3, 5), (3, 6)]))
        p = degree_profile(g)
        assert (p.k, p.c_nm2) == (1, 5) and B.lemma24_applicable(p, 7)
        assert not B.lemma24_applicable(p, 6)


class TestWeyl:
    def test_k2(self):
        q = signless_laplacian(make_complete(2))
        lhs, rhs = B.weyl_min_sum(q, q)
        assert lhs == pytest.approx(0.0, abs=1e-15) and rhs == pytest.approx(2.0, abs=1e-15)

    @given(graphs(min_n=2, max_n=10))
    def test_complement_pair(self, g):
        lhs, rhs = B.weyl_min_sum(signless_laplacian(complement(g)), signless_laplacian(g))
        assert lhs == pytest.approx(g.n - 2, abs=1e-9)
        assert lhs <= rhs + TOL

    def test_random_pairs(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            n = int(rng.integers(2, 13))
            a = rng.uniform(-1, 1, (n, n))
            b = rng.uniform(-1, 1, (n, n))
            lhs, rhs = B.weyl_min_sum(SymMatrix((a + a.T) / 2), SymMatrix((b + b.T) / 2))
            assert lhs <= rhs + TOL

    def test_mismatch(self):
        with pytest.raises(ValueError):
            B.weyl_min_sum(SymMatrix(np.eye(2)), SymMatrix(np.eye(3)))


class TestReport:
    def test_k5_minus_edge(self):
        g = make_complete_minus_edge(5)
        s = spectrum(g)
        rep = B.bound_report(g, s.q1, s.qn)
        assert (rep.n, rep.m, rep.r, rep.k) == (5, 9, 3, 3)
        assert rep.conj_bound == 1.5 and rep.thm_bound == 2.0
        assert rep.thm_slack == pytest.approx((9 - math.sqrt(33)) / 2 - 2, abs=1e-12)
        assert not rep.lemma24_applicable and rep.lemma24_lower is None
        assert rep.warnings == []

    def test_complete_flagged(self):
        g = make_complete(6)
        rep = B.bound_report(g, 10.0, 4.0)
        assert rep.warnings and rep.k == 6

    def test_small_n(self):
        with pytest.raises(ValueError):
            B.bound_report(make_complete(2), 2.0, 0.0)
