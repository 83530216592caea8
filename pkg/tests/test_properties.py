"""Property-based tests over random root configurations."""

import itertools
import json
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.guardrails.output_guard import OutputGuard
from src.poly.monic import MonicPoly, newton_sums, tschirnhausen, tschirnhausen_bound_check
from src.realroots.roots import OrderedRoots, cluster_roots, ordered_roots
from src.realroots.splitting import factor_tschirn_b2
from src.tracking.tracks import sample_grid

root = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False)
root_lists = st.lists(root, min_size=2, max_size=6)


class TestPolynomialProperties:
    @settings(max_examples=50, deadline=None)
    @given(root_lists)
    def test_tschirnhausen_recenters_roots(self, roots):
        mean = sum(roots) / len(roots)
        reduced = tschirnhausen(MonicPoly.from_roots(roots)).reduced
        expected = MonicPoly.from_roots([r - mean for r in roots])
        atol = 1e-9 * 7.0 ** len(roots)
        assert reduced.coeffs == pytest.approx(expected.coeffs, abs=atol)

    @settings(max_examples=50, deadline=None)
    @given(root_lists)
    def test_newton_sums_are_power_sums(self, roots):
        k = len(roots) + 2
        sums = newton_sums(MonicPoly.from_roots(roots), k)
        expected = [sum(r**i for r in roots) for i in range(1, k + 1)]
        assert sums == pytest.approx(expected, rel=1e-8, abs=1e-8 * 3.0**k)

    @settings(max_examples=50, deadline=None)
    @given(root_lists)
    def test_reduced_coefficient_bound(self, roots):
        T = tschirnhausen(MonicPoly.from_roots(roots))
        assume(T.a2 < -0.01)
        coeff_ratio, sum_ratio = tschirnhausen_bound_check(T)
        assert coeff_ratio <= math.sqrt(2.0) + 1e-6
        assert sum_ratio <= 1.0 + 1e-6


class TestRootProperties:
    @settings(max_examples=50, deadline=None)
    @given(root_lists)
    def test_ordered_roots_recovered(self, roots):
        values = sorted(roots)
        assume(min(np.diff(values)) >= 0.1)
        found = ordered_roots(MonicPoly.from_roots(values), certify=False)
        assert list(found.values) == pytest.approx(values, abs=1e-7)

    @settings(max_examples=50, deadline=None)
    @given(root_lists, st.floats(min_value=0.01, max_value=2.0))
    def test_clusters_contiguous_and_separated(self, roots, gap):
        values = sorted(roots)
        blocks = cluster_roots(values, gap)
        assert [i for block in blocks for i in block] == list(range(len(values)))
        for block in blocks:
            assert all(values[i + 1] - values[i] < gap for i in block[:-1])
        for left, right in zip(blocks, blocks[1:]):
            assert values[right[0]] - values[left[-1]] >= gap

    @settings(max_examples=50, deadline=None)
    @given(root_lists)
    def test_factor_size_bound(self, roots):
        values = tuple(sorted(roots))
        n = len(values)
        P = MonicPoly.from_roots(values)
        known = OrderedRoots(values=values, residual=0.0)
        for k in range(1, n):
            for block in itertools.combinations(range(n), k):
                b2, a2 = factor_tschirn_b2(P, block, roots=known)
                assert abs(b2) <= 2 * n * abs(a2) + 1e-9


class TestGridProperties:
    @settings(max_examples=50, deadline=None)
    @given(
        st.floats(min_value=-10.0, max_value=10.0),
        st.floats(min_value=1e-3, max_value=10.0),
        st.integers(min_value=1, max_value=500),
    )
    def test_sample_grid_nodes(self, start, width, n):
        grid = sample_grid((start, start + width), n)
        assert len(grid) == n + 1
        assert grid[0] == start
        assert grid[-1] == start + width
        assert np.all(np.diff(grid) > 0)


class TestSanitizeProperties:
    @settings(max_examples=50, deadline=None)
    @given(
        st.recursive(
            st.floats() | st.integers() | st.booleans() | st.none() | st.text(max_size=5),
            lambda children: st.lists(children, max_size=4) | st.dictionaries(st.text(max_size=4), children, max_size=4),
            max_leaves=20,
        )
    )
    def test_sanitized_reports_are_strict_json(self, report):
        json.dumps(OutputGuard().sanitize(report), allow_nan=False)
