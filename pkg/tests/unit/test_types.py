"""Unit tests for core types."""

import pytest

from nilgraph.core.types import THEOREM_IDS, CensusSummary, TheoremVerdict, VerdictStatus


class TestTheoremVerdict:
    """Tests for TheoremVerdict dataclass."""

    def test_pass_verdict(self):
        verdict = TheoremVerdict("T2.1", VerdictStatus.PASS, details={"alpha": 3})
        assert not verdict.unexpected
        assert verdict.to_dict() == {"theorem": "T2.1", "status": "pass", "details": {"alpha": 3}}

    def test_failure_needs_counterexample(self):
        """Should refuse a failing verdict without a counterexample."""
        with pytest.raises(ValueError, match="counterexample"):
            TheoremVerdict("T2.1", VerdictStatus.FAIL)

    def test_unexpected_failure(self):
        verdict = TheoremVerdict("T2.5", VerdictStatus.FAIL, counterexample={"ring": "Z8"})
        assert verdict.unexpected

    def test_erratum_failure(self):
        """Should not count a registered erratum as unexpected."""
        verdict = TheoremVerdict(
            "C3.2", VerdictStatus.FAIL, counterexample={"ring": "Z8"}, erratum="local non-reduced"
        )
        assert not verdict.unexpected
        assert verdict.to_dict()["erratum"] == "local non-reduced"

    def test_not_applicable_reason(self):
        verdict = TheoremVerdict("T4.4", VerdictStatus.NOT_APPLICABLE, reason="field")
        assert verdict.to_dict()["status"] == "not-applicable"
        assert verdict.to_dict()["reason"] == "field"


class TestCensusSummary:
    """Tests for CensusSummary."""

    def test_record(self):
        summary = CensusSummary(ring_count=2)
        summary.record("Z6", TheoremVerdict("C3.2", VerdictStatus.PASS))
        summary.record(
            "Z8", TheoremVerdict("C3.2", VerdictStatus.FAIL, counterexample={"x": 1}, erratum="e")
        )
        summary.record("Z9", TheoremVerdict("T2.1", VerdictStatus.FAIL, counterexample={"x": 1}))

        assert summary.errata_failures == [("Z8", "C3.2")]
        assert summary.unexpected_failures == [("Z9", "T2.1")]
        assert not summary.ok

    def test_to_dict_orders_theorems(self):
        """Should list theorems in registry order with every status counted."""
        summary = CensusSummary(ring_count=1)
        summary.record("Z6", TheoremVerdict("E4.6", VerdictStatus.NOT_APPLICABLE))
        summary.record("Z6", TheoremVerdict("T2.1", VerdictStatus.PASS))

        data = summary.to_dict()

        assert list(data["theorems"]) == ["T2.1", "E4.6"]
        assert data["theorems"]["T2.1"] == {"pass": 1, "fail": 0, "not-applicable": 0}
        assert data["unexpected_failures"] == []

    def test_registry(self):
        assert len(THEOREM_IDS) == len(set(THEOREM_IDS))
        assert THEOREM_IDS[0] == "T2.1"
