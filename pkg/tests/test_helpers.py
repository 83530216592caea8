"""Tests for shared helpers: intervals, float formatting and writers."""

import json

import pytest

from src.utils.helpers import dumps_json, format_float, format_table, parse_interval, write_csv, write_json


class TestParseInterval:
    def test_valid(self):
        assert parse_interval("-1, 2.5") == (-1.0, 2.5)

    def test_reversed_raises(self):
        with pytest.raises(ValueError, match="a < b"):
            parse_interval("2,1")

    def test_wrong_arity_raises(self):
        with pytest.raises(ValueError):
            parse_interval("1,2,3")


class TestFormatting:
    def test_full_precision(self):
        assert float(format_float(0.1)) == 0.1
        assert format_float(2.0) == "2"

    def test_table_alignment(self):
        table = format_table([("n", 2), ("bracket", 2.0), ("alpha_I", None)])
        assert table.splitlines() == ["n        2", "bracket  2", "alpha_I  -"]


class TestWriters:
    def test_csv_uses_lf(self, tmp_path):
        path = tmp_path / "rows.csv"
        write_csv(path, ["t", "branch_1"], [[0.0, 1.0 / 3.0]])
        data = path.read_bytes()
        assert b"\r" not in data
        assert data.decode().splitlines()[1] == "0,0.33333333333333331"

    def test_json_roundtrip(self, tmp_path):
        path = tmp_path / "out.json"
        write_json(path, {"a": [1, 2]})
        assert json.loads(path.read_text()) == {"a": [1, 2]}
        assert dumps_json({}).endswith("\n")
