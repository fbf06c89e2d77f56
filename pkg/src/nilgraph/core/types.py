"""Core types shared by the census and the CLI."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

THEOREM_IDS: tuple[str, ...] = (
    "T2.1",
    "R2.3",
    "T2.5",
    "T2.6",
    "C2.7",
    "C2.8",
    "P3.1",
    "C3.2",
    "T3.6",
    "C3.7",
    "L4.2",
    "T4.4",
    "C4.5",
    "E4.6",
)


class VerdictStatus(str, Enum):
    """Outcome of one theorem check on one ring."""

    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class TheoremVerdict:
    """Result of evaluating one theorem on one ring.

    ``details`` holds the independently computed sides of the statement.
    A failing verdict always carries a non-empty ``counterexample``.
    """

    theorem_id: str
    status: VerdictStatus
    details: dict[str, Any] = field(default_factory=dict)
    reason: str | None = None
    counterexample: dict[str, Any] | None = None
    erratum: str | None = None

    def __post_init__(self) -> None:
        if self.status is VerdictStatus.FAIL and not self.counterexample:
            raise ValueError(f"{self.theorem_id}: a failing verdict needs a counterexample")

    @property
    def unexpected(self) -> bool:
        """A failure not explained by a registered erratum."""
        return self.status is VerdictStatus.FAIL and self.erratum is None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        result: dict[str, Any] = {
            "theorem": self.theorem_id,
            "status": self.status.value,
            "details": self.details,
        }
        if self.reason:
            result["reason"] = self.reason
        if self.counterexample:
            result["counterexample"] = self.counterexample
        if self.erratum:
            result["erratum"] = self.erratum
        return result


@dataclass
class CensusSummary:
    """Per-theorem status counts over a census."""

    ring_count: int = 0
    counts: dict[str, Counter[str]] = field(default_factory=dict)
    unexpected_failures: list[tuple[str, str]] = field(default_factory=list)
    errata_failures: list[tuple[str, str]] = field(default_factory=list)

    def record(self, label: str, verdict: TheoremVerdict) -> None:
        """Count one verdict for the ring ``label``."""
        self.counts.setdefault(verdict.theorem_id, Counter())[verdict.status.value] += 1
        if verdict.unexpected:
            self.unexpected_failures.append((label, verdict.theorem_id))
        elif verdict.status is VerdictStatus.FAIL:
            self.errata_failures.append((label, verdict.theorem_id))

    @property
    def ok(self) -> bool:
        return not self.unexpected_failures

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "ring_count": self.ring_count,
            "theorems": {
                tid: {status.value: self.counts.get(tid, Counter())[status.value] for status in VerdictStatus}
                for tid in THEOREM_IDS
                if tid in self.counts
            },
            "unexpected_failures": [
                {"ring": label, "theorem": tid} for label, tid in self.unexpected_failures
            ],
            "errata_failures": [
                {"ring": label, "theorem": tid} for label, tid in self.errata_failures
            ],
        }
