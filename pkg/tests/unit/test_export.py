"""Tests for DOT, JSON and CSV exports."""

import csv
import io
import json

import pytest

from nilgraph.census.analyze import analyze_ring
from nilgraph.census.export import (
    CSV_COLUMNS,
    SCHEMA_VERSION,
    census_to_json,
    render,
    to_csv,
    to_dot,
    to_json,
    write_export,
)
from nilgraph.census.theorems import summarize
from nilgraph.core.exceptions import ExportError, InvalidParameterError


@pytest.fixture
def z8_analysis(config):
    return analyze_ring("Z8", config)


@pytest.fixture
def reports(config):
    return [analyze_ring(spec, config).report() for spec in ("Z8", "Z6", "GF(2)*GF(2)*GF(2)")]


class TestDot:
    """Tests for Graphviz output."""

    def test_z8(self, z8_analysis):
        """Should draw nilpotent ideals as boxes."""
        text = to_dot(z8_analysis.nil_graph)
        assert text.splitlines() == [
            'graph "Z8" {',
            '  0 [label="(4)", shape=box];',
            '  1 [label="(2)", shape=box];',
            "  0 -- 1;",
            "}",
        ]

    def test_custom_name(self, config):
        text = to_dot(analyze_ring("Z6", config).nil_graph, name="two fields")
        assert text.startswith('graph "two fields" {')
        assert "shape=ellipse" in text


class TestJson:
    """Tests for JSON reports."""

    def test_single_report(self, z8_analysis):
        data = json.loads(to_json(z8_analysis.report()))
        assert data["schema_version"] == SCHEMA_VERSION
        ring = data["ring"]
        assert ring["label"] == "Z8"
        assert ring["graph"]["order"] == 2
        assert ring["genus"]["verdict"] == "exactly_0"
        assert len(ring["theorems"]) == 14

    def test_census_sorted_by_label(self, reports):
        summary = summarize((r.label, r.theorems) for r in reports)
        data = json.loads(census_to_json(reports, summary))
        labels = [ring["label"] for ring in data["rings"]]
        assert labels == sorted(labels)
        assert data["summary"]["ring_count"] == 3

    def test_deterministic(self, config):
        """Should render identical text for repeated analyses."""
        first = to_json(analyze_ring("Z12", config).report())
        second = to_json(analyze_ring("Z12", config).report())
        assert first == second
        assert "elapsed" not in first


class TestCsv:
    """Tests for CSV reports."""

    def test_rows(self, reports):
        rows = list(csv.reader(io.StringIO(to_csv(reports))))
        assert rows[0] == list(CSV_COLUMNS)
        assert [row[0] for row in rows[1:]] == ["GF(2)*GF(2)*GF(2)", "Z6", "Z8"]
        z8 = dict(zip(rows[0], rows[3]))
        assert z8["vertices"] == "2"
        assert z8["reduced"] == "0"
        assert z8["fail"] == "1"
        assert z8["unexpected_failures"] == "0"


class TestRender:
    """Tests for format dispatch."""

    def test_dot_needs_graph(self, reports):
        with pytest.raises(InvalidParameterError):
            render("dot", reports)

    def test_unknown_format(self, reports):
        with pytest.raises(InvalidParameterError):
            render("yaml", reports)

    def test_json_of_many_reports(self, reports):
        data = json.loads(render("json", reports))
        assert len(data["rings"]) == 3

    def test_write_export(self, tmp_path):
        path = write_export(tmp_path / "out" / "graph.dot", "graph {}\n")
        assert path.read_text() == "graph {}\n"

    def test_write_failure(self, tmp_path):
        """Should wrap OS errors."""
        blocker = tmp_path / "file"
        blocker.write_text("x")
        with pytest.raises(ExportError):
            write_export(blocker / "child.json", "{}")
