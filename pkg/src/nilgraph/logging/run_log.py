"""JSONL ledgers of census runs."""

from __future__ import annotations

import json
import time
import uuid
from collections import Counter
from datetime import datetime, timezone
from pathlib import Path
from typing import TYPE_CHECKING, Any

import structlog

if TYPE_CHECKING:
    from nilgraph.census.runner import CensusResult

logger = structlog.get_logger()

RUN_METADATA = "census_run"


class CensusRunLogger:
    """Writes one ledger per census run for later inspection.

    The first line is a metadata header; each following line is one ring.
    Ledgers carry timestamps and durations, exported reports never do.

    Example:
        ```python
        run_log = CensusRunLogger(log_dir=Path("./logs"))
        path = run_log.log_run(result, seed=0, budget_ms=30000)

        # Later: list and inspect
        runs = run_log.list_recent()
        records = run_log.load_run(runs[0]["id"])
        ```
    """

    def __init__(self, log_dir: Path | None = None, verbose: bool = False):
        self.log_dir = log_dir or Path("./logs")
        self.verbose = verbose
        self.log_dir.mkdir(parents=True, exist_ok=True)

    def _get_log_path(self, run_id: str) -> Path:
        return self.log_dir / f"census-{run_id}.jsonl"

    def log_run(
        self,
        result: CensusResult,
        *,
        seed: int,
        budget_ms: int,
        source: str = "default",
        run_id: str | None = None,
    ) -> Path:
        """Write the ledger for a finished census run.

        Returns:
            Path to the ledger file
        """
        run_id = run_id or uuid.uuid4().hex[:12]
        log_path = self._get_log_path(run_id)
        summary = result.summary

        with open(log_path, "w", encoding="utf-8") as f:
            metadata = {
                "_type": RUN_METADATA,
                "run_id": run_id,
                "timestamp": datetime.now(timezone.utc).isoformat(),
                "source": source,
                "seed": seed,
                "budget_ms": budget_ms,
                "ring_count": len(result.reports) + len(result.failures),
                "unexpected_failures": len(summary.unexpected_failures),
                "errata_failures": len(summary.errata_failures),
                "ring_failures": len(result.failures),
                "duration_ms": round(result.duration_ms, 1),
            }
            f.write(json.dumps(metadata) + "\n")

            for report in result.reports:
                statuses = Counter(v.status.value for v in report.theorems)
                record = {
                    "ring": report.label,
                    "status_counts": dict(sorted(statuses.items())),
                    "unexpected": [v.theorem_id for v in report.theorems if v.unexpected],
                    "genus": str(report.genus.verdict),
                    "vertices": report.graph_order,
                    "edges": report.graph_size,
                }
                f.write(json.dumps(record) + "\n")
            for failure in result.failures:
                f.write(json.dumps({"ring": failure.label, "error": failure.error, "stage": failure.stage}) + "\n")

        if self.verbose:
            logger.info("Census run logged", run_id=run_id, path=str(log_path))
        return log_path

    def load_run(self, run_id: str) -> list[dict[str, Any]]:
        """Per-ring records of a run (empty if not found)."""
        log_path = self._get_log_path(run_id)
        if not log_path.exists():
            return []

        records: list[dict[str, Any]] = []
        with open(log_path, encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                data = json.loads(line)
                if data.get("_type") == RUN_METADATA:
                    continue
                records.append(data)
        return records

    def list_recent(self, limit: int = 10) -> list[dict[str, Any]]:
        """Run headers, newest first."""
        log_files = sorted(
            self.log_dir.glob("census-*.jsonl"),
            key=lambda p: p.stat().st_mtime,
            reverse=True,
        )[:limit]

        summaries: list[dict[str, Any]] = []
        for log_path in log_files:
            try:
                with open(log_path, encoding="utf-8") as f:
                    first_line = f.readline().strip()
                if not first_line:
                    continue
                data = json.loads(first_line)
                if data.get("_type") != RUN_METADATA:
                    continue
                summaries.append(
                    {
                        "id": data["run_id"],
                        "timestamp": data["timestamp"],
                        "source": data.get("source", ""),
                        "rings": data["ring_count"],
                        "unexpected": data["unexpected_failures"],
                        "duration_ms": data["duration_ms"],
                        "path": str(log_path),
                    }
                )
            except (json.JSONDecodeError, KeyError):
                continue
        return summaries

    def delete_run(self, run_id: str) -> bool:
        """Delete a run ledger; False if it does not exist."""
        log_path = self._get_log_path(run_id)
        if log_path.exists():
            log_path.unlink()
            return True
        return False

    def cleanup_old(self, max_age_days: int = 7) -> int:
        """Delete ledgers older than ``max_age_days``; returns the count."""
        cutoff = time.time() - (max_age_days * 24 * 60 * 60)
        deleted = 0
        for log_path in self.log_dir.glob("census-*.jsonl"):
            if log_path.stat().st_mtime < cutoff:
                log_path.unlink()
                deleted += 1
        return deleted
