"""Disk-quadratic maximum: closed form vs brute force, and the proof path."""

import math

import numpy as np
import pytest

from gregstar.ymax import (OracleGrid, YCase, abc_of_tau1, classification_trace,
                           classify_case, phi1, phi2, proof_path_bound,
                           subcase_iiic_sup, tau1_star, y_closed, y_oracle)


class TestClosedForm:
    def test_constant_objective(self):
        # |A| + max(1 - |z|^2) when B = C = 0
        v, case = y_closed(1.0, 0.0, 0.0)
        assert v == 2.0 and case is YCase.NONNEG_SMALL_B

    def test_boundary_dominates(self):
        v, case = y_closed(0.5, 3.0, 0.2)
        assert case is YCase.NONNEG_BIG_B
        assert v == 0.5 + 3.0 + 0.2

    def test_opposite_signs_sqrt_branch(self):
        # |1 - z^2| + 1 - |z|^2 peaks at z = +-i with value 2
        v, case = y_closed(1.0, 0.0, -1.0)
        assert case is YCase.R_THIRD
        assert abs(v - 2.0) < 1e-15

    def test_small_b_interior(self):
        v, case = y_closed(0.5, 0.4, 0.3)
        assert case is YCase.NONNEG_SMALL_B
        assert abs(v - (1 + 0.5 + 0.16 / (4 * 0.7))) < 1e-15

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            y_closed(math.nan, 0.0, 0.0)
        with pytest.raises(ValueError):
            y_closed(0.0, math.inf, 0.0)

    def test_classify_matches_value_branch(self):
        rng = np.random.default_rng(61)
        for _ in range(200):
            A, B, C = rng.uniform(-2, 2, 3)
            v, case = y_closed(A, B, C)
            assert classify_case(A, B, C) is case
            assert v >= 1 - 1e-12 or case in \
                (YCase.R_FIRST, YCase.R_SECOND, YCase.R_THIRD)


class TestOracle:
    def test_matches_closed_form_on_random_triples(self):
        rng = np.random.default_rng(67)
        for _ in range(100):
            A, B, C = rng.uniform(-2, 2, 3)
            v, _ = y_closed(A, B, C)
            o = y_oracle(A, B, C)
            # the grid value is a lower bound on the true maximum
            assert -1e-9 <= v - o <= 1e-6

    def test_coarse_grid_still_sane(self):
        grid = OracleGrid(n_r=64, n_theta=64, refine_levels=2)
        v, _ = y_closed(0.7, -0.3, 0.1)
        assert abs(y_oracle(0.7, -0.3, 0.1, grid) - v) < 1e-4

    def test_matches_on_proof_path(self):
        for t1 in np.linspace(0.05, 0.95, 19):
            A, B, C = abc_of_tau1(float(t1))
            v, _ = y_closed(A, B, C)
            assert -1e-9 <= v - y_oracle(A, B, C) <= 1e-6


class TestProofPath:
    def test_abc_at_half(self):
        A, B, C = abc_of_tau1(0.5)
        assert abs(A - 1 / 96) < 1e-15
        assert abs(B + 1 / 24) < 1e-15
        assert abs(C + 13 / 8) < 1e-15

    def test_domain(self):
        for bad in (0.0, 1.0, -0.1, 1.5):
            with pytest.raises(ValueError):
                abc_of_tau1(bad)

    def test_ac_negative_and_c_large(self):
        for t1 in np.linspace(0.01, 0.99, 50):
            A, B, C = abc_of_tau1(float(t1))
            assert A * C < 0
            assert abs(C) > 1

    def test_switch_point_is_quartic_root(self):
        t = tau1_star()
        assert 0 < t < 1
        assert abs(17 * t ** 4 + 44 * t ** 2 - 12) < 1e-12

    def test_phi1_describes_path_before_switch(self):
        for t1 in np.linspace(0.02, tau1_star() - 1e-6, 25):
            assert abs(proof_path_bound(float(t1)) - phi1(float(t1)) / 2304) \
                < 1e-13

    def test_phi2_describes_path_after_switch(self):
        for t1 in np.linspace(tau1_star() + 1e-6, 0.999, 25):
            assert abs(proof_path_bound(float(t1)) - phi2(float(t1)) / 1152) \
                < 1e-13

    def test_branches_meet_continuously(self):
        t = tau1_star()
        assert abs(phi1(t) / 2304 - phi2(t) / 1152) < 1e-12

    def test_phi1_sup_is_hankel_bound(self):
        assert phi1(0.0) / 2304 == 1 / 64
        ts = np.linspace(0.0, tau1_star(), 200)
        vals = [phi1(float(t)) / 2304 for t in ts]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_phi2_sup_at_switch(self):
        t = tau1_star()
        assert abs(subcase_iiic_sup() - phi2(t) / 1152) < 1e-12
        ts = np.linspace(t, 0.999, 200)
        vals = [phi2(float(tt)) / 1152 for tt in ts]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert subcase_iiic_sup() < 1 / 64

    def test_path_bound_below_global_bound(self):
        for t1 in np.linspace(0.01, 0.99, 99):
            assert proof_path_bound(float(t1)) < 1 / 64

    def test_trace_records(self):
        recs = list(classification_trace([0.3, 0.7]))
        assert len(recs) == 2
        for r in recs:
            assert set(r) == {"tau1", "A", "B", "C", "case", "y", "bound"}
            assert r["case"] in YCase.__members__
            v, case = y_closed(r["A"], r["B"], r["C"])
            assert r["y"] == v and r["case"] == case.name
