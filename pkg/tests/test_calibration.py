"""Tests for the Lipschitz / bracket calibration."""

import math

import pytest

from src.calibration.calibrate import FamilyResult, RatioTracker, calibrate, evaluate_family, ratio_of
from src.curves.curve import from_root_functions

I0 = (-1.0, 1.0)
I1 = (-2.0, 2.0)


class TestEvaluateFamily:
    def test_model_family_ratio_half(self):
        family = from_root_functions([[0.0, 1.0], [0.0, -1.0]], I1)
        result = evaluate_family(family, I0, I1, grid=64)
        assert result.empirical == pytest.approx(1.0)
        assert result.bracket == pytest.approx(2.0)
        assert result.ratio == pytest.approx(0.5)
        assert result.A0 == pytest.approx(12.0)
        assert result.assumption_ok

    def test_constant_family_ratio_zero(self):
        family = from_root_functions([[1.0], [-1.0]], I1)
        result = evaluate_family(family, I0, I1, grid=16)
        assert result.empirical == 0.0
        assert result.ratio == 0.0

    def test_degenerate_m2_is_skipped(self):
        family = from_root_functions([[0.0, 1.0], [0.0, 2.0], [0.0, 3.0]], I1)
        result = evaluate_family(family, I0, I1, p=2, grid=16, alpha_grid=16)
        assert result.skipped is not None
        assert result.ratio is None


class TestRatioOf:
    def test_positive_bracket(self):
        assert ratio_of(1.0, 4.0) == 0.25

    def test_zero_bracket(self):
        assert ratio_of(0.0, 0.0) == 0.0
        assert math.isinf(ratio_of(1.0, 0.0))


class TestRatioTracker:
    def setup_method(self):
        self.tracker = RatioTracker(stability_threshold=0.1)

    def _record(self, index: int, ratio: float | None) -> None:
        self.tracker.record(FamilyResult(index, 1.0, 1.0, ratio, 6.0, 1.0, True))

    def test_summary(self):
        for i, ratio in [(2, 1.0), (0, 0.5), (1, 0.25)]:
            self._record(i, ratio)
        summary = self.tracker.get_summary()
        assert summary["min"] == 0.25
        assert summary["median"] == 0.5
        assert summary["max"] == 1.0
        assert summary["half_sample_max"] == 0.5
        assert summary["growth"] == pytest.approx(1.0)
        assert summary["stable"] is False

    def test_records_sorted_by_index(self):
        for i in (3, 1, 2):
            self._record(i, 0.1)
        assert [r.index for r in self.tracker.records] == [1, 2, 3]

    def test_stable_when_half_sample_has_max(self):
        for i, ratio in enumerate([0.9, 0.1, 0.2, 0.3]):
            self._record(i, ratio)
        summary = self.tracker.get_summary()
        assert summary["growth"] == 0.0
        assert summary["stable"] is True

    def test_skipped_families_excluded(self):
        self._record(0, None)
        self._record(1, 0.4)
        summary = self.tracker.get_summary()
        assert summary["families"] == 2
        assert summary["evaluated"] == 1

    def test_empty(self):
        assert self.tracker.get_summary()["evaluated"] == 0


class TestCalibrate:
    @pytest.mark.asyncio
    async def test_deterministic(self):
        first = await calibrate(2, num_families=3, seed=7, grid=32, alpha_grid=32, assumption_points=2)
        second = await calibrate(2, num_families=3, seed=7, grid=32, alpha_grid=32, assumption_points=2)
        assert first.summary == second.summary
        assert first.table_rows() == second.table_rows()

    @pytest.mark.asyncio
    async def test_rows_in_index_order(self):
        result = await calibrate(2, num_families=4, seed=1, grid=16, alpha_grid=16, assumption_points=0)
        assert [row[0] for row in result.table_rows()] == [0, 1, 2, 3]
        assert result.table_header()[0] == "family"
        assert result.to_dict()["seed"] == 1

    @pytest.mark.asyncio
    async def test_seed_changes_families(self):
        a = await calibrate(2, num_families=2, seed=1, grid=16, assumption_points=0)
        b = await calibrate(2, num_families=2, seed=2, grid=16, assumption_points=0)
        assert a.table_rows() != b.table_rows()
