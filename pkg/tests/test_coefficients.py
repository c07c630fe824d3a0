"""Closed-form Taylor coefficients against the series-solver oracle."""

from fractions import Fraction as F

import numpy as np
import pytest

from gregstar.caratheodory import (p_from_atoms, schwarz_from_p, unit_rational)
from gregstar.coefficients import (ExtremalFunction, coeffs_from_c, extremal,
                                   log_coeffs, psi_omega_coeffs,
                                   solve_subordination, vector_from_series)
from gregstar.gregory import psi_series
from gregstar.series import TruncatedSeries


def exact_c_tuple(rng, m=3):
    """c1..c4 of an exact rational-weight mix of exact unit-circle atoms."""
    raw = [F(int(rng.integers(1, 9)), int(rng.integers(9, 17)))
           for _ in range(m)]
    total = sum(raw)
    weights = [w / total for w in raw]
    atoms = [unit_rational(F(int(rng.integers(-40, 41)), 17))
             for _ in range(m)]
    p = p_from_atoms(weights, atoms, 4)
    return p, tuple(p.coeffs[1:5])


class TestCoeffsFromC:
    def test_halfplane_kernel(self):
        v = coeffs_from_c(2, 2, 2, 2)
        assert (v.a2, v.a3, v.a4, v.a5) == \
            (F(1, 2), F(1, 12), F(1, 72), F(-1, 720))

    def test_even_kernel(self):
        v = coeffs_from_c(0, 2, 0, 2)
        assert (v.a2, v.a3, v.a4, v.a5) == (0, F(1, 4), 0, F(1, 96))

    def test_rejects_non_member(self):
        with pytest.raises(ValueError, match="not a class member"):
            coeffs_from_c(3, 0, 0, 0)

    def test_gammas(self):
        v = coeffs_from_c(2, 2, 2, 2)
        # gamma2 = (1/12 - 1/8)/2, gamma3 = (1/72 - 1/24 + 1/24)/2
        assert (v.gamma1, v.gamma2, v.gamma3) == \
            (F(1, 4), F(-1, 48), F(1, 144))

    def test_exact_random_tuples_match_solver(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            p, (c1, c2, c3, c4) = exact_c_tuple(rng)
            f = solve_subordination(schwarz_from_p(p), 5)
            want = vector_from_series(f)
            got = coeffs_from_c(c1, c2, c3, c4)
            for k in ("a2", "a3", "a4", "a5", "gamma1", "gamma2", "gamma3"):
                assert getattr(got, k) == getattr(want, k), k

    def test_json_dict(self):
        d = coeffs_from_c(2, 2, 2, 2).to_json_dict()
        assert d["a2"] == "1/2" and d["a5"] == "-1/720"
        d2 = coeffs_from_c(2.0, 2.0, 2.0, 2.0).to_json_dict()
        assert d2["a2"] == [0.5, 0.0]


class TestPsiOmega:
    def test_corrected_quartic_matches_compose_oracle(self):
        rng = np.random.default_rng(23)
        for _ in range(25):
            p, (c1, c2, c3, c4) = exact_c_tuple(rng)
            omega = schwarz_from_p(p)
            oracle = psi_series(4).compose(omega)
            q = psi_omega_coeffs(c1, c2, c3, c4)
            assert tuple(oracle.coeffs[1:5]) == q

    def test_misprinted_quartic_disagrees(self):
        # with c2^3 in place of c1^2 c2 the z^4 coefficient is wrong
        rng = np.random.default_rng(29)
        p, (c1, c2, c3, c4) = exact_c_tuple(rng)
        oracle = psi_series(4).compose(schwarz_from_p(p))
        wrong = (-649 * c1 ** 4 + 3060 * c2 ** 3 - 3360 * c1 * c3
                 - 1680 * c2 ** 2 + 2880 * c4) * F(1, 11520)
        assert oracle.coeffs[4] != wrong

    def test_halfplane_values(self):
        # c = (2,2,2,2) means omega = z, so psi(omega) = psi itself
        q = psi_omega_coeffs(2, 2, 2, 2)
        assert q == tuple(psi_series(4).coeffs[1:5])


class TestSolver:
    def test_identity_omega_gives_first_witness(self):
        f = solve_subordination(TruncatedSeries.identity(6), 6)
        assert f == extremal(1, 6).series

    def test_square_omega_gives_second_witness(self):
        omega = TruncatedSeries([F(0), F(0), F(1)] + [F(0)] * 8)
        f = solve_subordination(omega, 10)
        assert f == extremal(2, 10).series

    def test_residual_identity(self):
        # z f'/f must reproduce psi(omega) through the order
        rng = np.random.default_rng(31)
        p, _ = exact_c_tuple(rng)
        omega = schwarz_from_p(p)
        f = solve_subordination(omega, 4)
        lhs = f.differentiate() / f.shift_down()
        rhs = psi_series(4).compose(omega)
        assert lhs.truncate(3) == rhs.truncate(3)

    def test_requires_vanishing_omega(self):
        with pytest.raises(ValueError, match="vanish"):
            solve_subordination(TruncatedSeries([F(1, 2), F(0)]), 2)

    def test_requires_positive_order(self):
        with pytest.raises(ValueError, match="order"):
            solve_subordination(TruncatedSeries.identity(3), 0)


class TestExtremal:
    def test_k1(self):
        v = vector_from_series(extremal(1).series)
        assert (v.a2, v.a3, v.a4, v.a5) == \
            (F(1, 2), F(1, 12), F(1, 72), F(-1, 720))

    def test_k2(self):
        v = vector_from_series(extremal(2).series)
        assert (v.a2, v.a3, v.a4, v.a5) == (0, F(1, 4), 0, F(1, 96))

    def test_k3(self):
        v = vector_from_series(extremal(3).series)
        assert (v.a2, v.a3, v.a4, v.a5) == (0, 0, F(1, 6), 0)

    def test_k4(self):
        v = vector_from_series(extremal(4).series)
        assert (v.a2, v.a3, v.a4, v.a5) == (0, 0, 0, F(1, 8))

    def test_k_fold_symmetry(self):
        f = extremal(3, 12).series
        for n, c in enumerate(f.coeffs):
            if (n - 1) % 3 != 0:
                assert c == 0

    def test_bad_k(self):
        with pytest.raises(ValueError):
            extremal(0)

    def test_normalization_enforced(self):
        with pytest.raises(ValueError, match="normalized"):
            ExtremalFunction(1, TruncatedSeries([F(0), F(2)]))


class TestLogCoeffs:
    def test_koebe(self):
        # z/(1-z)^2 = sum n z^n has gamma_n = 1/n
        f = TruncatedSeries([F(n) for n in range(7)])
        assert log_coeffs(f) == (1, F(1, 2), F(1, 3))

    def test_matches_gamma_formulas(self):
        rng = np.random.default_rng(37)
        p, (c1, c2, c3, c4) = exact_c_tuple(rng)
        f = solve_subordination(schwarz_from_p(p), 5)
        v = coeffs_from_c(c1, c2, c3, c4)
        assert log_coeffs(f) == (v.gamma1, v.gamma2, v.gamma3)

    def test_validation(self):
        with pytest.raises(ValueError, match="f'"):
            log_coeffs(TruncatedSeries([F(1), F(1), F(0), F(0), F(0)]))
        with pytest.raises(ValueError, match="z\\^4"):
            log_coeffs(TruncatedSeries.identity(3))


def test_vector_from_series_needs_order_five():
    with pytest.raises(ValueError, match="z\\^5"):
        vector_from_series(TruncatedSeries.identity(4))
