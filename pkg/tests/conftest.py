"""Pytest configuration and fixtures."""

from dataclasses import dataclass

import networkx as nx
import pytest

from nilgraph.census.spec import RingSpec
from nilgraph.core.config import GenusBudget, NilGraphConfig
from nilgraph.graphs.nil_graph import NilGraph, build_ag_graph, build_nil_graph, t_subgraph
from nilgraph.rings.ideals import LatticeReport, analyze_lattice
from nilgraph.rings.ring import (
    FiniteRing,
    direct_product,
    make_gf,
    make_poly_quotient,
    make_zmod,
)


@pytest.fixture
def z6():
    return make_zmod(6)


@pytest.fixture
def z8():
    return make_zmod(8)


@pytest.fixture
def z30():
    """Z30, a product of three fields."""
    return make_zmod(30)


@pytest.fixture
def z4_cubic():
    """Z4[x]/(x^3)."""
    return make_poly_quotient(make_zmod(4), [0, 0, 0, 1])


@pytest.fixture
def gf2_z4():
    return direct_product([make_gf(2), make_zmod(4)])


@pytest.fixture
def lattice_of():
    """Factory: lattice report of a ring."""
    return analyze_lattice


@pytest.fixture
def small_budget():
    """A genus budget small enough for unit tests."""
    return GenusBudget(seed=0, time_ms=20_000, restarts=8, steps=600, exhaustive_nodes=100_000)


@pytest.fixture
def config(tmp_path):
    """Configuration with a short genus budget and an isolated log directory."""
    return NilGraphConfig(
        budget_ms=20_000,
        local_search_restarts=8,
        local_search_steps=600,
        exhaustive_search_nodes=200_000,
        max_workers=2,
        log_dir=tmp_path / "logs",
    )


@pytest.fixture
def temp_log_dir(tmp_path):
    """Create a temporary log directory."""
    log_dir = tmp_path / "logs"
    log_dir.mkdir()
    return log_dir


def _brute_force_alpha(g: nx.Graph) -> int:
    adj = {v: set(g[v]) for v in g}
    best = 0

    def extend(size: int, candidates: list[int]) -> None:
        nonlocal best
        best = max(best, size)
        if size + len(candidates) <= best:
            return
        for i, v in enumerate(candidates):
            extend(size + 1, [u for u in candidates[i + 1 :] if u not in adj[v]])

    extend(0, sorted(g.nodes))
    return best


@pytest.fixture
def alpha_oracle():
    """Independence number by walking every independent set."""
    return _brute_force_alpha


@dataclass(frozen=True)
class CensusGraphs:
    """A census ring with its lattice and every graph built on it."""

    ring: FiniteRing
    lattice: LatticeReport
    nil: NilGraph
    nil_unit: NilGraph
    ag: NilGraph
    t_strict: NilGraph
    t_unit: NilGraph


@pytest.fixture(scope="session")
def census_graphs():
    """Factory: lattice and graphs of a ring spec, built once per session."""
    cache: dict[str, CensusGraphs] = {}

    def build(spec: RingSpec) -> CensusGraphs:
        if spec.label not in cache:
            ring = spec.build()
            lattice = analyze_lattice(ring)
            cache[spec.label] = CensusGraphs(
                ring=ring,
                lattice=lattice,
                nil=build_nil_graph(ring, lattice),
                nil_unit=build_nil_graph(ring, lattice, include_unit_ideal=True),
                ag=build_ag_graph(ring, lattice),
                t_strict=t_subgraph(ring, lattice),
                t_unit=t_subgraph(ring, lattice, include_unit_ideal=True),
            )
        return cache[spec.label]

    return build
