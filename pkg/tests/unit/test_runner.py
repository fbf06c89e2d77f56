"""Tests for census files and the census run."""

import pytest

from nilgraph.census.runner import (
    BUNDLED_CENSUSES,
    CensusEntry,
    bundled_census_text,
    load_census,
    parse_census,
    run_census,
    run_census_sync,
)
from nilgraph.census.spec import parse_ring_spec
from nilgraph.core.exceptions import ConfigNotFoundError, ConfigValidationError


def _entries(*specs):
    return [CensusEntry(parse_ring_spec(s)) for s in specs]


class TestParseCensus:
    """Tests for census file parsing."""

    def test_comments_and_budget(self):
        text = "# fields\nZ6   # two fields\n\nGF(2)*Z16 | budget=5000\n"
        entries = parse_census(text)
        assert [e.label for e in entries] == ["Z6", "GF(2)*Z16"]
        assert entries[0].budget_ms is None
        assert entries[1].budget_ms == 5000
        assert entries[1].line == 4

    def test_duplicates_skipped(self):
        """Should keep the first of two specs with the same canonical label."""
        entries = parse_census("Z2*Z3\n(Z2)*(Z3)\n")
        assert len(entries) == 1

    def test_bad_spec_names_line(self):
        with pytest.raises(ConfigValidationError) as exc_info:
            parse_census("Z6\nZ6*Q\n", source="mine.txt")
        assert exc_info.value.field == "mine.txt:2"

    def test_bad_option(self):
        with pytest.raises(ConfigValidationError):
            parse_census("Z6 | workers=3\n")


class TestLoadCensus:
    """Tests for census sources."""

    def test_default(self):
        labels = {e.label for e in load_census()}
        assert {"Z6", "Z8", "Z6[x]/(x^2)", "Z4[x]/(x^3)", "GF(2)*Z16"} <= labels

    def test_bundled_names(self):
        for name in BUNDLED_CENSUSES:
            assert bundled_census_text(name).strip()
        assert len(load_census("genus_boundary")) == 20

    def test_unknown_bundled_name(self):
        with pytest.raises(ConfigValidationError):
            bundled_census_text("nope")

    def test_file(self, tmp_path):
        path = tmp_path / "census.txt"
        path.write_text("Z8\nZ9\n")
        assert [e.label for e in load_census(path)] == ["Z8", "Z9"]

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigNotFoundError):
            load_census(tmp_path / "missing.txt")


class TestRunCensus:
    """Tests for the parallel census run."""

    async def test_sorted_results(self, config):
        """Should return reports in label order whatever the completion order."""
        seen = []
        result = await run_census(
            _entries("Z8", "Z6", "GF(2)*GF(3)"), config, on_result=lambda r: seen.append(r.label)
        )
        assert [r.label for r in result.reports] == ["GF(2)*GF(3)", "Z6", "Z8"]
        assert sorted(seen) == ["GF(2)*GF(3)", "Z6", "Z8"]
        assert result.summary.ring_count == 3
        assert result.ok
        assert result.duration_ms > 0

    async def test_resource_limit_becomes_failure(self, config):
        """Should record an oversized ring and keep going."""
        small = config.model_copy(update={"max_ring_order": 10})
        result = await run_census(_entries("Z6", "Z12"), small)
        assert [r.label for r in result.reports] == ["Z6"]
        assert len(result.failures) == 1
        failure = result.failures[0]
        assert failure.label == "Z12"
        assert failure.stage == "build"
        assert not result.ok

    async def test_selected_theorems(self, config):
        result = await run_census(_entries("Z6"), config, theorem_ids=["T2.1"])
        assert [v.theorem_id for v in result.reports[0].theorems] == ["T2.1"]

    def test_sync_wrapper(self, config):
        result = run_census_sync(_entries("Z4"), config)
        assert result.reports[0].graph_order == 1
