"""Per-ring analysis pipeline.

``analyze_ring`` runs the stages build, lattice, nil_graph, independence,
genus and theorems in order and keeps every intermediate object;
``analyze`` reduces that to a serializable ``RingReport``.

Example:
    ```python
    from nilgraph.census.analyze import analyze

    report = analyze("GF(2)*Z16")
    print(report.genus.verdict)  # exactly_1
    ```
"""

from __future__ import annotations

import time
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

import structlog

from nilgraph.census.spec import RingSpec, parse_ring_spec
from nilgraph.census.theorems import verify_ring
from nilgraph.core.config import GenusBudget, NilGraphConfig
from nilgraph.core.exceptions import ResourceLimitExceeded
from nilgraph.core.types import TheoremVerdict
from nilgraph.graphs.analysis import IndependentSet, independence_number, reduction
from nilgraph.graphs.genus import GenusClass, classify_genus
from nilgraph.graphs.nil_graph import (
    NilGraph,
    build_ag_graph,
    build_nil_graph,
    t_subgraph,
)
from nilgraph.rings.ideals import LatticeReport, analyze_lattice
from nilgraph.rings.ring import FiniteRing

logger = structlog.get_logger()

STAGES: tuple[str, ...] = ("build", "lattice", "nil_graph", "independence", "genus", "theorems")


@contextmanager
def _stage(name: str, label: str) -> Iterator[None]:
    start = time.perf_counter()
    try:
        yield
    except ResourceLimitExceeded as e:
        named = e.at_stage(name)
        if named is e:
            raise
        raise named from e
    logger.debug(
        "Stage complete",
        ring=label,
        stage=name,
        elapsed_ms=round((time.perf_counter() - start) * 1000, 1),
    )


@dataclass
class RingAnalysis:
    """Every intermediate object computed for one ring.

    ``unit_graph`` is AG_N(R) with R added as a vertex; ``alpha_unit`` is
    its independence number. ``t_strict`` and ``t_unit`` are G_T(R) without
    and with R.
    """

    spec: RingSpec
    ring: FiniteRing
    lattice: LatticeReport
    nil_graph: NilGraph
    ag_graph: NilGraph
    unit_graph: NilGraph
    t_strict: NilGraph
    t_unit: NilGraph
    alpha_strict: IndependentSet
    alpha_unit: IndependentSet
    alpha_t_strict: IndependentSet
    alpha_t_unit: IndependentSet
    genus: GenusClass
    reduced_genus: GenusClass
    budget: GenusBudget
    theorems: list[TheoremVerdict] = field(default_factory=list)

    @property
    def label(self) -> str:
        return self.spec.label

    def report(self) -> RingReport:
        lattice = self.lattice
        return RingReport(
            label=self.label,
            order=self.ring.order,
            ideal_count=len(lattice.all_ideals),
            max_count=len(lattice.maximal),
            min_count=len(lattice.minimal_primes),
            is_reduced=lattice.is_reduced,
            is_local=lattice.is_local,
            graph_order=self.nil_graph.order,
            graph_size=self.nil_graph.size,
            ag_size=self.ag_graph.size,
            alpha_strict=self.alpha_strict.size,
            alpha_unit=self.alpha_unit.size,
            degree_histogram=self.nil_graph.degree_histogram(),
            local_factors=[factor.to_dict() for factor in lattice.local_factors],
            vertices=self.nil_graph.labels(),
            genus=self.genus,
            theorems=list(self.theorems),
            graph=self.nil_graph,
        )


@dataclass
class RingReport:
    """Serializable summary of one ring's analysis."""

    label: str
    order: int
    ideal_count: int
    max_count: int
    min_count: int
    is_reduced: bool
    is_local: bool
    graph_order: int
    graph_size: int
    ag_size: int
    alpha_strict: int
    alpha_unit: int
    degree_histogram: dict[int, int]
    local_factors: list[dict[str, Any]]
    vertices: list[str]
    genus: GenusClass
    theorems: list[TheoremVerdict] = field(default_factory=list)
    graph: NilGraph | None = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization; contains no timings."""
        return {
            "label": self.label,
            "order": self.order,
            "ideal_count": self.ideal_count,
            "max_ideals": self.max_count,
            "min_primes": self.min_count,
            "is_reduced": self.is_reduced,
            "is_local": self.is_local,
            "graph": {
                "order": self.graph_order,
                "size": self.graph_size,
                "ag_size": self.ag_size,
                "vertices": self.vertices,
                "degree_histogram": {str(k): v for k, v in self.degree_histogram.items()},
            },
            "alpha_strict": self.alpha_strict,
            "alpha_unit": self.alpha_unit,
            "local_factors": self.local_factors,
            "genus": self.genus.to_dict(),
            "theorems": [verdict.to_dict() for verdict in self.theorems],
        }


def analyze_ring(
    spec: RingSpec | str,
    config: NilGraphConfig | None = None,
    *,
    budget_ms: int | None = None,
    verify: bool = True,
) -> RingAnalysis:
    """Run the full pipeline on one ring.

    Args:
        spec: Parsed spec or spec text
        config: Size bounds and genus budget; defaults apply when omitted
        budget_ms: Per-ring override of the genus search time cap
        verify: Evaluate the theorem checks as the last stage

    Raises:
        ResourceLimitExceeded: Naming the stage whose bound was hit
        RingSpecSyntaxError: If ``spec`` is text that does not parse
    """
    config = config or NilGraphConfig()
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    budget = config.genus_budget().with_time(budget_ms)
    label = spec.label
    start = time.perf_counter()

    with _stage("build", label):
        if spec.order > config.max_ring_order:
            raise ResourceLimitExceeded("ring order", config.max_ring_order, actual=spec.order)
        ring = spec.build(check_order=config.axiom_check_order)

    with _stage("lattice", label):
        lattice = analyze_lattice(
            ring, config.max_ring_order, ideal_check_order=config.ideal_check_order
        )

    with _stage("nil_graph", label):
        nil_graph = build_nil_graph(ring, lattice)
        unit_graph = build_nil_graph(ring, lattice, include_unit_ideal=True)
        ag_graph = build_ag_graph(ring, lattice)
        t_strict = t_subgraph(ring, lattice)
        t_unit = t_subgraph(ring, lattice, include_unit_ideal=True)

    limit = config.independence_max_vertices
    with _stage("independence", label):
        alpha_strict = independence_number(nil_graph.graph, limit)
        alpha_unit = independence_number(unit_graph.graph, limit)
        alpha_t_strict = independence_number(t_strict.graph, limit)
        alpha_t_unit = independence_number(t_unit.graph, limit)

    with _stage("genus", label):
        genus = classify_genus(nil_graph.graph, budget)
        reduced_genus = classify_genus(reduction(nil_graph.graph), budget)

    analysis = RingAnalysis(
        spec=spec,
        ring=ring,
        lattice=lattice,
        nil_graph=nil_graph,
        ag_graph=ag_graph,
        unit_graph=unit_graph,
        t_strict=t_strict,
        t_unit=t_unit,
        alpha_strict=alpha_strict,
        alpha_unit=alpha_unit,
        alpha_t_strict=alpha_t_strict,
        alpha_t_unit=alpha_t_unit,
        genus=genus,
        reduced_genus=reduced_genus,
        budget=budget,
    )

    if verify:
        with _stage("theorems", label):
            analysis.theorems = verify_ring(analysis)

    logger.info(
        "Ring analyzed",
        ring=label,
        order=ring.order,
        vertices=nil_graph.order,
        edges=nil_graph.size,
        genus=str(genus.verdict),
        elapsed_ms=round((time.perf_counter() - start) * 1000, 1),
    )
    return analysis


def analyze(
    spec: RingSpec | str,
    config: NilGraphConfig | None = None,
    *,
    budget_ms: int | None = None,
) -> RingReport:
    """Analyze one ring and return its report."""
    return analyze_ring(spec, config, budget_ms=budget_ms).report()
