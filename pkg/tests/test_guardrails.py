"""Tests for input and output guardrails."""

import json

import numpy as np
import pytest

from src.exceptions import HyperbolicError
from src.guardrails.input_guard import InputGuard, InputGuardError
from src.guardrails.output_guard import OutputGuard


class TestInputGuard:
    def setup_method(self):
        self.guard = InputGuard()

    def test_nested_intervals(self):
        self.guard.check_intervals((-1.0, 1.0), (-2.0, 2.0))

    def test_touching_boundary_raises(self):
        with pytest.raises(InputGuardError, match="strictly inside"):
            self.guard.check_intervals((-2.0, 1.0), (-2.0, 2.0))

    def test_empty_interval_raises(self):
        with pytest.raises(InputGuardError, match="empty"):
            self.guard.check_intervals((1.0, 1.0), (-2.0, 2.0))

    def test_grid_limits(self):
        self.guard.check_grid(1)
        self.guard.check_grid(self.guard.max_grid)
        with pytest.raises(InputGuardError):
            self.guard.check_grid(0)
        with pytest.raises(InputGuardError):
            self.guard.check_grid(self.guard.max_grid + 1)

    def test_tol_positive(self):
        self.guard.check_tol(1e-12)
        with pytest.raises(InputGuardError):
            self.guard.check_tol(0.0)

    def test_degree_limits(self):
        self.guard.check_degree(self.guard.max_degree)
        with pytest.raises(InputGuardError, match="degree"):
            self.guard.check_degree(self.guard.max_degree + 1)

    def test_p_range(self):
        self.guard.check_p(2, 3)
        self.guard.check_p(3, 3)
        self.guard.check_p(1, 1)
        with pytest.raises(InputGuardError):
            self.guard.check_p(4, 3)

    def test_p_of_one_rejected_below_full_multiplicity(self):
        with pytest.raises(InputGuardError, match="2 <= p < n"):
            self.guard.check_p(1, 3)

    def test_is_domain_error(self):
        error = InputGuardError("bad grid")
        assert isinstance(error, HyperbolicError)
        assert str(error) == "invalid input: bad grid"


class TestOutputGuard:
    def setup_method(self):
        self.guard = OutputGuard()

    def test_non_finite_floats(self):
        assert self.guard.sanitize([float("inf"), -float("inf"), float("nan")]) == ["inf", "-inf", "nan"]

    def test_numpy_values(self):
        clean = self.guard.sanitize({"a": np.array([1.5, np.inf]), "b": np.float64(2.0), "c": np.int64(3)})
        assert clean == {"a": [1.5, "inf"], "b": 2.0, "c": 3}
        assert type(clean["c"]) is int

    def test_tuples_become_lists(self):
        assert self.guard.sanitize({"I0": (-1.0, 1.0)}) == {"I0": [-1.0, 1.0]}

    def test_nested_report(self):
        report = {"points": [{"left": None, "ok": np.bool_(True), "ratio": float("inf")}]}
        clean = self.guard.sanitize(report)
        assert clean == {"points": [{"left": None, "ok": True, "ratio": "inf"}]}
        json.dumps(clean, allow_nan=False)

    def test_key_order_kept(self):
        assert list(self.guard.sanitize({"z": 1, "a": 2})) == ["z", "a"]
