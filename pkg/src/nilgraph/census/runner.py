"""Census files and the parallel census run.

A census file lists one ring spec per line. ``#`` starts a comment and a
trailing ``| budget=<ms>`` overrides the genus search time for that ring::

    # products of fields
    GF(2)*GF(3)*GF(5)*GF(7)   | budget=60000
    Z6[x]/(x^2)

Rings run on worker threads under a semaphore; results are reassembled in
canonical label order, so the output does not depend on scheduling.
"""

from __future__ import annotations

import asyncio
import re
import time
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

import structlog

from nilgraph.census.analyze import RingReport, analyze_ring
from nilgraph.census.spec import RingSpec, parse_ring_spec
from nilgraph.census.theorems import summarize, verify_ring
from nilgraph.core.config import NilGraphConfig
from nilgraph.core.exceptions import (
    ConfigNotFoundError,
    ConfigValidationError,
    NilGraphError,
    ResourceLimitExceeded,
)
from nilgraph.core.types import CensusSummary

logger = structlog.get_logger()

BUNDLED_CENSUSES: dict[str, str] = {
    "default": "default_census.txt",
    "genus_boundary": "genus_boundary.txt",
}

_BUDGET_RE = re.compile(r"^budget\s*=\s*(\d+)$")


@dataclass(frozen=True)
class CensusEntry:
    """One ring of a census with its optional genus time override."""

    spec: RingSpec
    budget_ms: int | None = None
    line: int = 0

    @property
    def label(self) -> str:
        return self.spec.label


@dataclass(frozen=True)
class RingFailure:
    """A ring whose analysis stopped with an error."""

    label: str
    error: str
    stage: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"ring": self.label, "error": self.error, "stage": self.stage}


@dataclass
class CensusResult:
    """Reports in label order, failed rings and the theorem summary."""

    reports: list[RingReport]
    summary: CensusSummary
    failures: list[RingFailure] = field(default_factory=list)
    duration_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.summary.ok and not self.failures


def parse_census(text: str, source: str = "<census>") -> list[CensusEntry]:
    """Parse census file text.

    Raises:
        ConfigValidationError: On a malformed line, naming ``source:line``
    """
    entries: list[CensusEntry] = []
    seen: set[str] = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        spec_text, _, option = line.partition("|")
        budget: int | None = None
        if option.strip():
            match = _BUDGET_RE.match(option.strip())
            if match is None:
                raise ConfigValidationError(f"{source}:{number}", option.strip(), "budget=<ms>")
            budget = int(match.group(1))
        try:
            spec = parse_ring_spec(spec_text.strip())
        except NilGraphError as e:
            raise ConfigValidationError(f"{source}:{number}", spec_text.strip(), str(e)) from e
        if spec.label in seen:
            logger.warning("Duplicate census entry skipped", ring=spec.label, line=number)
            continue
        seen.add(spec.label)
        entries.append(CensusEntry(spec, budget, number))
    return entries


def bundled_census_text(name: str) -> str:
    """Text of a census shipped with the package.

    Raises:
        ConfigValidationError: If ``name`` is not a bundled census
    """
    if name not in BUNDLED_CENSUSES:
        raise ConfigValidationError("census", name, f"one of: {', '.join(BUNDLED_CENSUSES)}")
    return resources.files("nilgraph.census").joinpath(BUNDLED_CENSUSES[name]).read_text("utf-8")


def load_census(source: Path | str | None = None) -> list[CensusEntry]:
    """Load a census from a file path or a bundled census name (default census when None).

    Raises:
        ConfigNotFoundError: If a path is given and does not exist
    """
    if source is None:
        source = "default"
    if isinstance(source, str) and source in BUNDLED_CENSUSES:
        return parse_census(bundled_census_text(source), source)
    path = Path(source)
    if not path.is_file():
        raise ConfigNotFoundError(str(path))
    return parse_census(path.read_text(encoding="utf-8"), str(path))


def _run_entry(
    entry: CensusEntry, config: NilGraphConfig, theorem_ids: Sequence[str] | None
) -> RingReport:
    analysis = analyze_ring(entry.spec, config, budget_ms=entry.budget_ms, verify=False)
    analysis.theorems = verify_ring(analysis, theorem_ids)
    return analysis.report()


async def run_census(
    entries: Iterable[CensusEntry],
    config: NilGraphConfig | None = None,
    *,
    theorem_ids: Sequence[str] | None = None,
    on_result: Callable[[RingReport | RingFailure], None] | None = None,
) -> CensusResult:
    """Analyze every entry with at most ``config.max_workers`` rings in flight.

    A ring that hits a resource limit is recorded as a failure and the run
    continues; other errors propagate.
    """
    config = config or NilGraphConfig()
    items = list(entries)
    semaphore = asyncio.Semaphore(config.max_workers)
    start = time.perf_counter()

    async def _run_one(entry: CensusEntry) -> RingReport | RingFailure:
        async with semaphore:
            try:
                result: RingReport | RingFailure = await asyncio.to_thread(
                    _run_entry, entry, config, theorem_ids
                )
            except ResourceLimitExceeded as e:
                logger.warning("Ring skipped", ring=entry.label, stage=e.stage, error=str(e))
                result = RingFailure(entry.label, str(e), e.stage)
            if on_result is not None:
                on_result(result)
            return result

    outcomes = await asyncio.gather(*[_run_one(entry) for entry in items])

    reports = sorted((o for o in outcomes if isinstance(o, RingReport)), key=lambda r: r.label)
    failures = sorted((o for o in outcomes if isinstance(o, RingFailure)), key=lambda f: f.label)
    summary = summarize((r.label, r.theorems) for r in reports)
    duration_ms = (time.perf_counter() - start) * 1000
    logger.info(
        "Census complete",
        rings=len(items),
        failures=len(failures),
        unexpected=len(summary.unexpected_failures),
        duration_ms=round(duration_ms, 1),
    )
    return CensusResult(reports, summary, failures, duration_ms)


def run_census_sync(
    entries: Iterable[CensusEntry],
    config: NilGraphConfig | None = None,
    *,
    theorem_ids: Sequence[str] | None = None,
) -> CensusResult:
    """Blocking wrapper around ``run_census``."""
    return asyncio.run(run_census(entries, config, theorem_ids=theorem_ids))
