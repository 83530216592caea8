"""Tests for monic polynomials, the Tschirnhausen transform and the polynomial codecs."""

import math

import numpy as np
import pytest

from src.exceptions import DegenerateScale
from src.poly.monic import (
    MonicPoly,
    derivative_poly,
    eval_poly,
    newton_sums,
    normalize_scale,
    tschirnhausen,
    tschirnhausen_bound_check,
)
from src.poly.serialization import dump_monic, load_monic, monic_from_csv_row, parse_monic


def poly(*coeffs: float) -> MonicPoly:
    return MonicPoly.from_coeffs(coeffs)


class TestMonicPoly:
    def test_from_roots(self):
        assert MonicPoly.from_roots([1.0, -1.0]).coeffs == (0.0, -1.0)
        assert MonicPoly.from_roots([-1.0, 0.0, 1.0]).coeffs == (0.0, -1.0, 0.0)

    def test_wrong_coefficient_count_raises(self):
        with pytest.raises(ValueError, match="expected 2 coefficients"):
            MonicPoly(degree=2, coeffs=(1.0,))

    def test_zero_degree_raises(self):
        with pytest.raises(ValueError):
            MonicPoly(degree=0, coeffs=())

    def test_cauchy_radius(self):
        assert poly(0.0, -4.0).cauchy_radius() == 5.0


class TestEval:
    def test_constant_term(self):
        assert eval_poly(poly(0.0, -1.0), 0.0) == -1.0

    def test_known_root(self):
        assert eval_poly(poly(0.0, -1.0), 1.0) == 0.0

    def test_cubic(self):
        assert poly(0.0, -1.0, 0.0)(2.0) == 6.0


class TestTschirnhausen:
    def test_square_recenters_to_z2(self):
        T = tschirnhausen(poly(2.0, 1.0))
        assert T.shift == 1.0
        assert T.reduced.coeffs == (0.0, 0.0)

    def test_roots_zero_two_recenter_to_plus_minus_one(self):
        T = tschirnhausen(poly(-2.0, 0.0))
        assert T.shift == -1.0
        assert T.reduced.coeffs == (0.0, -1.0)

    def test_cube(self):
        T = tschirnhausen(poly(3.0, 3.0, 1.0))
        assert T.shift == 1.0
        assert T.reduced.coeffs == (0.0, 0.0, 0.0)

    def test_first_coefficient_exactly_zero(self):
        T = tschirnhausen(MonicPoly.from_roots([0.1, 0.7, 2.3, -4.9]))
        assert T.reduced.coeffs[0] == 0.0

    def test_a2_property(self):
        assert tschirnhausen(poly(0.0, -1.0, 0.0)).a2 == -1.0
        assert tschirnhausen(poly(5.0)).a2 == 0.0

    def test_matches_recentered_roots(self):
        roots = np.array([1.0, 2.0, 4.0])
        T = tschirnhausen(MonicPoly.from_roots(roots))
        expected = MonicPoly.from_roots(roots - roots.mean()).coeffs
        assert np.allclose(T.reduced.coeffs, expected, atol=1e-12)


class TestNewtonSums:
    def test_plus_minus_one(self):
        assert newton_sums(poly(0.0, -1.0), 2) == [0.0, 2.0]

    def test_three_roots(self):
        assert newton_sums(poly(0.0, -1.0, 0.0), 3) == [0.0, 2.0, 0.0]

    def test_roots_one_two(self):
        assert newton_sums(poly(-3.0, 2.0), 2) == [3.0, 5.0]

    def test_beyond_degree(self):
        # roots +-1: s_3 = 0, s_4 = 2
        assert newton_sums(poly(0.0, -1.0), 4) == [0.0, 2.0, 0.0, 2.0]

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            newton_sums(poly(0.0, -1.0), 0)


class TestNormalizeScale:
    def test_z2_minus_4(self):
        assert normalize_scale(tschirnhausen(poly(0.0, -4.0))).coeffs == (0.0, -1.0)

    def test_identity_when_a2_is_minus_one(self):
        assert normalize_scale(tschirnhausen(poly(0.0, -1.0, 0.0))).coeffs == (0.0, -1.0, 0.0)

    def test_z2_minus_quarter(self):
        assert normalize_scale(poly(0.0, -0.25)).coeffs == (0.0, -1.0)

    def test_higher_coefficients_scaled(self):
        # roots -2, -1, 3 are centered: a2 = -7, a3 = -6
        Q = normalize_scale(MonicPoly.from_roots([-2.0, -1.0, 3.0]))
        assert Q.coeffs[2] == pytest.approx(-6.0 / 7**1.5)

    def test_degenerate_scale(self):
        with pytest.raises(DegenerateScale, match="a2 = 0"):
            normalize_scale(poly(2.0, 1.0))


class TestDerivative:
    def test_quadratic(self):
        assert list(derivative_poly(poly(0.0, -1.0))) == [2.0, 0.0]

    def test_cubic(self):
        assert list(derivative_poly(poly(0.0, -1.0, 0.0))) == [3.0, 0.0, -1.0]

    def test_linear(self):
        assert list(derivative_poly(poly(5.0))) == [1.0]


class TestBoundCheck:
    def test_z3_minus_z(self):
        coeff_ratio, sum_ratio = tschirnhausen_bound_check(tschirnhausen(poly(0.0, -1.0, 0.0)))
        assert coeff_ratio == pytest.approx(1.0)
        assert sum_ratio == pytest.approx(1.0)

    def test_bounds_hold_for_spread_roots(self):
        coeff_ratio, sum_ratio = tschirnhausen_bound_check(tschirnhausen(MonicPoly.from_roots([-3.0, 0.5, 1.0, 7.0])))
        assert coeff_ratio <= math.sqrt(2.0)
        assert sum_ratio <= 1.0 + 1e-12

    def test_zero_a2(self):
        assert tschirnhausen_bound_check(tschirnhausen(poly(0.0, 0.0))) == (0.0, 0.0)


class TestSerialization:
    def test_parse_json(self):
        assert parse_monic('{"degree": 2, "coeffs": [0, -1]}').coeffs == (0.0, -1.0)

    def test_parse_csv(self):
        assert parse_monic("3, 0, -1, 0\n").coeffs == (0.0, -1.0, 0.0)

    def test_csv_row_degree_mismatch(self):
        with pytest.raises(ValueError):
            monic_from_csv_row(["3", "0", "-1"])

    def test_dump_and_load(self, tmp_path):
        path = tmp_path / "p.json"
        P = poly(-3.0, 2.0)
        path.write_text(dump_monic(P))
        assert load_monic(path) == P
