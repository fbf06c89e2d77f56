"""End-to-end census runs with the default budget."""

import json

import networkx as nx
import pytest

from nilgraph.census.analyze import analyze, analyze_ring
from nilgraph.census.export import census_to_json, to_csv, to_dot
from nilgraph.census.runner import load_census, run_census_sync
from nilgraph.core.config import NilGraphConfig
from nilgraph.core.types import VerdictStatus
from nilgraph.graphs.analysis import reduction


@pytest.fixture(scope="module")
def census_config():
    return NilGraphConfig(seed=0, max_workers=2)


def _verdict(analysis, theorem_id):
    return next(v for v in analysis.theorems if v.theorem_id == theorem_id)


class TestSmallRings:
    """Known nil-graphs of small rings."""

    @pytest.mark.parametrize("spec", ["Z6", "Z8"])
    def test_single_edge(self, spec, census_config):
        report = analyze(spec, census_config)
        assert (report.graph_order, report.graph_size) == (2, 1)
        assert str(report.genus.verdict) == "exactly_0"

    def test_z210_reduces_to_genus_one(self, census_config):
        """Should reduce to a 10-vertex graph on the torus."""
        analysis = analyze_ring("Z210", census_config)
        reduced = reduction(analysis.nil_graph.graph)
        assert (reduced.number_of_nodes(), reduced.number_of_edges()) == (10, 21)
        assert str(analysis.genus.verdict) == "exactly_1"
        assert analysis.genus.verify(analysis.nil_graph.graph)

    @pytest.mark.parametrize(
        ("spec", "strict", "unit"),
        [
            ("GF(2)*GF(3)", 1, 2),
            ("Z2*Z3*Z5", 3, 4),
            ("GF(2)*GF(2)*GF(2)*GF(3)", 7, 8),
        ],
    )
    def test_products_of_fields(self, spec, strict, unit, census_config):
        """Should give alpha 2^(n-1) - 1 without R and 2^(n-1) with it."""
        report = analyze(spec, census_config)
        assert report.alpha_strict == strict
        assert report.alpha_unit == unit


class TestGenusBoundary:
    """Rings whose nil-graph sits at the genus one boundary."""

    def test_z6_poly_erratum(self, census_config):
        analysis = analyze_ring("Z6[x]/(x^2)", census_config)
        assert str(analysis.genus.verdict) == "exactly_1"
        verdict = _verdict(analysis, "E4.6")
        assert verdict.status is VerdictStatus.FAIL
        assert verdict.erratum
        assert not verdict.unexpected

    def test_z4_cubic_not_toroidal(self, census_config):
        analysis = analyze_ring("Z4[x]/(x^3)", census_config)
        assert str(analysis.genus.verdict) == "at_least_2"
        assert _verdict(analysis, "E4.6").status is VerdictStatus.PASS

    def test_gf2_products(self, census_config):
        assert str(analyze("GF(2)*Z4", census_config).genus.verdict) == "exactly_0"
        assert str(analyze("GF(2)*Z16", census_config).genus.verdict) == "exactly_1"

    @pytest.mark.slow
    def test_chain_rings(self, census_config):
        """Should place K7 on the torus and obstruct K8."""
        seven = analyze_ring("Z2[x]/(x^8)", census_config)
        assert nx.is_isomorphic(seven.nil_graph.graph, nx.complete_graph(7))
        assert str(seven.genus.verdict) == "exactly_1"
        assert str(analyze("Z2[x]/(x^9)", census_config).genus.verdict) == "at_least_2"

    @pytest.mark.slow
    def test_boundary_census_is_decided(self, census_config):
        """Should decide every genus in the boundary census."""
        result = run_census_sync(load_census("genus_boundary"), census_config)
        assert not result.failures
        assert all(r.genus.verdict.kind.value != "interval" for r in result.reports)


@pytest.mark.slow
class TestDefaultCensus:
    """Full default census."""

    def test_no_unexpected_failures(self, census_config):
        result = run_census_sync(load_census(), census_config)
        assert result.failures == []
        assert result.summary.unexpected_failures == []
        assert result.ok

    def test_deterministic(self, census_config):
        """Should export identical JSON, CSV and DOT whatever the worker count."""
        entries = load_census()
        serial = run_census_sync(entries, census_config.model_copy(update={"max_workers": 1}))
        parallel = run_census_sync(entries, census_config.model_copy(update={"max_workers": 4}))
        assert [r.label for r in serial.reports] == [r.label for r in parallel.reports]
        assert census_to_json(serial.reports, serial.summary) == census_to_json(
            parallel.reports, parallel.summary
        )
        assert to_csv(serial.reports) == to_csv(parallel.reports)
        for one, other in zip(serial.reports, parallel.reports, strict=True):
            assert one.graph is not None
            assert other.graph is not None
            assert to_dot(one.graph, one.label) == to_dot(other.graph, other.label)
        summary = json.loads(census_to_json(serial.reports, serial.summary))["summary"]
        assert summary["ring_count"] == len(entries)
