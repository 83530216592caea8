"""Tests for root tracks, Lipschitz estimates and one-sided derivative diagnostics."""

import numpy as np
import pytest

from src.curves.curve import from_root_functions, make_curve
from src.curves.generator import random_family
from src.exceptions import InvalidN, NotHyperbolic
from src.tracking.derivatives import MatchedBranch, c1_report, one_sided_derivatives
from src.tracking.tracks import (
    empirical_lipschitz,
    lipschitz_by_segments,
    sample_grid,
    track_matched,
    track_ordered,
)


def family(*roots, domain=(-1.0, 1.0)):
    return from_root_functions(list(roots), domain)


MODEL = family([0.0, 1.0], [0.0, -1.0])
CONSTANT = family([-1.0], [1.0])
PARALLEL = family([0.0, 1.0], [1.0, 1.0])


class TestSampleGrid:
    def test_two_steps(self):
        assert list(sample_grid((0.0, 1.0), 2)) == [0.0, 0.5, 1.0]

    def test_single_step(self):
        assert list(sample_grid((-1.0, 1.0), 1)) == [-1.0, 1.0]

    def test_invalid_n(self):
        with pytest.raises(InvalidN):
            sample_grid((0.0, 1.0), 0)

    def test_last_node_exact(self):
        grid = sample_grid((0.1, 0.7), 3)
        assert len(grid) == 4
        assert grid[-1] == 0.7


class TestTrackOrdered:
    def setup_method(self):
        self.grid = sample_grid((-1.0, 1.0), 8)

    def test_model_case(self):
        tracks = track_ordered(MODEL.curve, self.grid)
        assert np.allclose(tracks.branches[0], -np.abs(self.grid), atol=1e-10)
        assert np.allclose(tracks.branches[1], np.abs(self.grid), atol=1e-10)
        assert tracks.mode == "ordered"

    def test_constant(self):
        tracks = track_ordered(CONSTANT.curve, self.grid)
        assert np.allclose(tracks.branches[0], -1.0)
        assert np.allclose(tracks.branches[1], 1.0)

    def test_never_crossing(self):
        tracks = track_ordered(PARALLEL.curve, self.grid)
        assert np.allclose(tracks.branches[0], self.grid, atol=1e-10)
        assert np.allclose(tracks.branches[1], self.grid + 1.0, atol=1e-10)

    def test_rows_and_header(self):
        tracks = track_ordered(CONSTANT.curve, sample_grid((0.0, 1.0), 2))
        assert tracks.header() == ["t", "branch_1", "branch_2"]
        assert tracks.to_rows()[1][0] == 0.5
        assert len(tracks.to_rows()) == 3

    def test_not_hyperbolic_reports_node(self):
        curve = make_curve([[0.0], [1.0, 0.0, -1.0]], (-1.0, 1.0), validation_grid=2)
        with pytest.raises(NotHyperbolic, match="t=0.0"):
            track_ordered(curve, [-1.0, 0.0, 1.0])


class TestTrackMatched:
    def setup_method(self):
        self.grid = sample_grid((-1.0, 1.0), 8)

    def test_lines_cross(self):
        tracks = track_matched(MODEL.curve, self.grid)
        assert np.allclose(tracks.branches[0], self.grid, atol=1e-9)
        assert np.allclose(tracks.branches[1], -self.grid, atol=1e-9)
        assert tracks.mode == "matched"

    def test_crossing_off_grid(self):
        grid = sample_grid((-1.0, 1.0), 7)
        tracks = track_matched(MODEL.curve, grid)
        assert np.allclose(tracks.branches[0], grid, atol=1e-9)

    def test_non_crossing_equals_ordered(self):
        matched = track_matched(PARALLEL.curve, self.grid)
        ordered = track_ordered(PARALLEL.curve, self.grid)
        assert np.array_equal(matched.branches, ordered.branches)

    def test_constant(self):
        tracks = track_matched(CONSTANT.curve, self.grid)
        assert np.allclose(tracks.branches, [[-1.0], [1.0]])

    def test_matched_branches_follow_root_functions(self):
        fam = family([0.0, 1.0, 0.0, -1.0], [0.2, -0.5], [-0.3, 0.0, 1.0])
        grid = sample_grid((-1.0, 1.0), 2000)
        tracks = track_matched(fam.curve, grid, certify=False)
        truth = np.array([[float(r(t)) for t in grid] for r in fam.root_polys])
        for branch in tracks.branches:
            assert min(np.max(np.abs(branch - row)) for row in truth) < 1e-6


class TestLipschitz:
    def test_model_case(self):
        tracks = track_ordered(MODEL.curve, sample_grid((-1.0, 1.0), 10))
        estimate = empirical_lipschitz(tracks)
        assert estimate.overall == pytest.approx(1.0)
        assert estimate.per_branch == [pytest.approx(1.0), pytest.approx(1.0)]

    def test_constant(self):
        assert empirical_lipschitz(track_ordered(CONSTANT.curve, sample_grid((-1.0, 1.0), 4))).overall == 0.0

    def test_scaled_lines(self):
        tracks = track_ordered(family([0.0, 3.0], [0.0, -3.0]).curve, sample_grid((-1.0, 1.0), 6))
        assert empirical_lipschitz(tracks).overall == pytest.approx(3.0)

    def test_needs_two_nodes(self):
        tracks = track_ordered(CONSTANT.curve, [0.0])
        with pytest.raises(ValueError):
            empirical_lipschitz(tracks)

    def test_segments_split_at_collision(self):
        segmented = lipschitz_by_segments(MODEL.curve, sample_grid((-1.0, 1.0), 7))
        assert 0.0 in segmented.breakpoints
        assert len(segmented.per_segment) == 2
        assert segmented.per_segment == [pytest.approx(1.0), pytest.approx(1.0)]
        assert segmented.overall == pytest.approx(1.0)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_refinement_keeps_ordered_constants(self, seed):
        fam = random_family(2, np.random.default_rng(seed), root_degree=2, domain=(-1.0, 1.0))
        coarse = empirical_lipschitz(track_ordered(fam.curve, sample_grid((-1.0, 1.0), 1024), certify=False))
        fine = empirical_lipschitz(track_ordered(fam.curve, sample_grid((-1.0, 1.0), 2048), certify=False))
        for before, after in zip(coarse.per_branch, fine.per_branch):
            assert after <= 1.01 * before + 1e-9

    @pytest.mark.parametrize("seed", [3, 4])
    def test_gluing_on_random_families(self, seed):
        fam = random_family(3, np.random.default_rng(seed), domain=(-1.0, 1.0))
        segmented = lipschitz_by_segments(fam.curve, sample_grid((-1.0, 1.0), 200), certify=False)
        assert segmented.per_segment
        assert segmented.overall <= max(segmented.per_segment) + 1e-9


class TestOneSidedDerivatives:
    def test_kink_of_upper_root(self):
        d = one_sided_derivatives(MODEL.curve, 1, 0.0)
        assert d.left == pytest.approx(-1.0, abs=1e-6)
        assert d.right == pytest.approx(1.0, abs=1e-6)
        assert d.converged

    def test_smooth_point(self):
        d = one_sided_derivatives(MODEL.curve, 1, 0.5)
        assert d.left == pytest.approx(1.0, abs=1e-6)
        assert d.right == pytest.approx(1.0, abs=1e-6)

    def test_matched_branch_is_a_line(self):
        d = one_sided_derivatives(MODEL.curve, MatchedBranch(0), 0.0)
        assert d.left == pytest.approx(1.0, abs=1e-6)
        assert d.right == pytest.approx(1.0, abs=1e-6)

    def test_endpoint_has_one_side(self):
        d = one_sided_derivatives(MODEL.curve, 1, 1.0)
        assert d.right is None
        assert d.left == pytest.approx(1.0, abs=1e-6)

    def test_richardson_orders_recorded(self):
        d = one_sided_derivatives(MODEL.curve, 0, 0.5, halvings=4)
        assert len(d.richardson_orders) == 8
        assert d.richardson_orders[0]["richardson"] is None

    def test_h0_must_be_positive(self):
        with pytest.raises(ValueError):
            one_sided_derivatives(MODEL.curve, 0, 0.0, h0=0.0)


class TestC1Report:
    def test_model_case_kink(self):
        report = c1_report(MODEL.curve, [-0.5, 0.5], [0.0], branches=[1])
        point = report.points[0]
        assert point.left == pytest.approx(-1.0, abs=1e-6)
        assert point.right == pytest.approx(1.0, abs=1e-6)
        assert point.left_limit == pytest.approx(-1.0, abs=1e-6)
        assert point.right_limit == pytest.approx(1.0, abs=1e-6)
        assert report.continuous
        assert report.existence_ok

    def test_pair_collision_beside_a_constant_root(self):
        # roots t, -t and 1
        fam = family([0.0, 1.0], [0.0, -1.0], [1.0], domain=(-0.5, 0.5))
        report = c1_report(fam.curve, [-0.25, 0.25], [0.0])
        slopes = [(p.branch, p.left, p.right) for p in report.points]
        assert slopes == [
            (0, pytest.approx(1.0, abs=1e-6), pytest.approx(-1.0, abs=1e-6)),
            (1, pytest.approx(-1.0, abs=1e-6), pytest.approx(1.0, abs=1e-6)),
            (2, pytest.approx(0.0, abs=1e-6), pytest.approx(0.0, abs=1e-6)),
        ]
        assert report.max_mismatch < 1e-3
        assert report.continuous
        assert report.existence_ok

    def test_pair_collision_matched_branch_is_smooth(self):
        fam = family([0.0, 1.0], [0.0, -1.0], [1.0], domain=(-0.5, 0.5))
        d = one_sided_derivatives(fam.curve, MatchedBranch(0), 0.0)
        assert d.left == pytest.approx(1.0, abs=1e-6)
        assert d.right == pytest.approx(1.0, abs=1e-6)

    def test_quadratic_collision(self):
        fam = family([0.0, 0.0, 1.0], [0.0, 0.0, -1.0])
        report = c1_report(fam.curve, [-0.5, 0.5], [0.0])
        for point in report.points:
            assert point.left == pytest.approx(0.0, abs=1e-6)
            assert point.right == pytest.approx(0.0, abs=1e-6)
        assert report.max_mismatch < 1e-3
        assert report.continuous

    def test_cubic_collision(self):
        fam = family([0.0, 0.0, 0.0, 1.0], [0.0, 0.0, 0.0, 2.0], [0.0, 0.0, 0.0, 3.0])
        report = c1_report(fam.curve, [], [0.0])
        assert all(abs(p.left) < 1e-4 and abs(p.right) < 1e-4 for p in report.points)
        assert report.continuous

    def test_to_dict_flags(self):
        data = c1_report(MODEL.curve, [0.5], [0.5], branches=[0]).to_dict()
        assert data["existence_ok"] is True
        assert data["continuous"] is True
        assert data["points"][0]["branch"] == 0
