"""Ideal graphs of a finite ring: AG_N(R), AG(R) and the decomposition subgraph G_T(R).

Vertices are ideals, ordered by (size, sorted element list). Two distinct
vertices are adjacent when their product lies in the target ideal: Nil(R)
for the nil-graph, (0) for the annihilating-ideal graph.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import networkx as nx
import structlog

from nilgraph.core.exceptions import InvalidParameterError, UnsupportedPredictionError
from nilgraph.rings.ideals import (
    Ideal,
    LatticeReport,
    annihilator,
    principal_ideal,
    product_within,
)
from nilgraph.rings.ring import FiniteRing, Vector

logger = structlog.get_logger()


class GraphKind(str, Enum):
    NIL = "nil"
    ANNIHILATING = "annihilating"
    DECOMPOSITION = "decomposition"


@dataclass(frozen=True)
class NilGraph:
    """A graph on ideals with vertex metadata.

    Attributes:
        ring: The ring the ideals belong to
        kind: Which adjacency rule built the graph
        vertices: Ideals in canonical order
        edges: Index pairs (i, j) with i < j
        in_nil: Whether each vertex lies inside Nil(R)
        delta: Indices of the primitive idempotents each vertex contains
        witnesses: For each vertex, an ideal J with I*J inside the target
    """

    ring: FiniteRing = field(repr=False)
    kind: GraphKind
    vertices: tuple[Ideal, ...]
    edges: frozenset[tuple[int, int]]
    in_nil: tuple[bool, ...]
    delta: tuple[frozenset[int], ...]
    witnesses: tuple[Ideal | None, ...] = field(default=(), repr=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def labels(self) -> list[str]:
        return [v.label() for v in self.vertices]

    @cached_property
    def graph(self) -> nx.Graph:
        """The graph as networkx, nodes 0..n-1 carrying ``label`` and ``in_nil``."""
        g = nx.Graph()
        for i, vertex in enumerate(self.vertices):
            g.add_node(i, label=vertex.label(), in_nil=self.in_nil[i])
        g.add_edges_from(sorted(self.edges))
        return g

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def degrees(self) -> list[int]:
        counts = [0] * self.order
        for i, j in self.edges:
            counts[i] += 1
            counts[j] += 1
        return counts

    def degree_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.degrees()).items()))

    def index_of(self, ideal: Ideal) -> int | None:
        return next((i for i, v in enumerate(self.vertices) if v == ideal), None)


def _support(lattice: LatticeReport, ideal: Ideal) -> frozenset[int]:
    return frozenset(
        i for i, e in enumerate(lattice.primitive_idempotents) if e.coeffs in ideal.elements
    )


def _build(
    lattice: LatticeReport,
    target: frozenset[Vector],
    kind: GraphKind,
    allow_self_witness: bool,
    include_unit_ideal: bool = False,
) -> NilGraph:
    ring = lattice.ring
    candidates = list(lattice.nontrivial_ideals)
    n = len(candidates)
    within = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            ok = product_within(candidates[i], candidates[j], target)
            within[i][j] = within[j][i] = ok

    kept: list[int] = []
    witnesses: list[Ideal | None] = []
    for i in range(n):
        witness = next(
            (j for j in range(n) if within[i][j] and (allow_self_witness or j != i)), None
        )
        if witness is not None:
            kept.append(i)
            witnesses.append(candidates[witness])

    vertices = [candidates[i] for i in kept]
    edges = {
        (a, b)
        for a, b in itertools.combinations(range(len(kept)), 2)
        if within[kept[a]][kept[b]]
    }

    if include_unit_ideal:
        # R*J = J, so R is adjacent to exactly the vertices inside the target.
        unit = lattice.all_ideals[-1]
        index = len(vertices)
        vertices.append(unit)
        witnesses.append(None)
        edges.update((a, index) for a, v in enumerate(vertices[:-1]) if v.elements <= target)

    nil = lattice.nilradical.elements
    graph = NilGraph(
        ring=ring,
        kind=kind,
        vertices=tuple(vertices),
        edges=frozenset(edges),
        in_nil=tuple(v.elements <= nil for v in vertices),
        delta=tuple(_support(lattice, v) for v in vertices),
        witnesses=tuple(witnesses),
    )
    logger.debug(
        "Ideal graph built", ring=ring.label, kind=kind.value, order=graph.order, size=graph.size
    )
    return graph


def build_nil_graph(
    ring: FiniteRing,
    lattice: LatticeReport,
    *,
    allow_self_witness: bool = True,
    include_unit_ideal: bool = False,
) -> NilGraph:
    """AG_N(R): I ~ J iff I*J lies in Nil(R).

    With ``include_unit_ideal`` the ideal R is added as an extra vertex,
    adjacent to the vertices inside Nil(R).
    """
    _check_lattice(ring, lattice)
    return _build(
        lattice, lattice.nilradical.elements, GraphKind.NIL, allow_self_witness, include_unit_ideal
    )


def build_ag_graph(
    ring: FiniteRing, lattice: LatticeReport, *, allow_self_witness: bool = True
) -> NilGraph:
    """AG(R): I ~ J iff I*J = (0)."""
    _check_lattice(ring, lattice)
    return _build(lattice, frozenset({ring.zero_vec}), GraphKind.ANNIHILATING, allow_self_witness)


def _check_lattice(ring: FiniteRing, lattice: LatticeReport) -> None:
    if lattice.ring is not ring and lattice.ring != ring:
        raise InvalidParameterError("lattice", lattice.ring.label, f"the lattice of {ring.label}")


def t_subgraph(
    ring: FiniteRing, lattice: LatticeReport, include_unit_ideal: bool = False
) -> NilGraph:
    """G_T(R): ideals generated by sums of primitive idempotents.

    Vertex S (a non-empty subset of idempotent indices) is the ideal
    generated by the sum of the e_i with i in S; the full set S = [n] is R
    itself and only appears with ``include_unit_ideal``.
    """
    _check_lattice(ring, lattice)
    idempotents = lattice.primitive_idempotents
    n = len(idempotents)
    if n == 0:
        raise InvalidParameterError("ring", ring.label, "a ring with a primitive idempotent decomposition")

    subsets = [
        frozenset(s)
        for size in range(1, n + 1)
        for s in itertools.combinations(range(n), size)
        if include_unit_ideal or size < n
    ]
    vertices: list[Ideal] = []
    for s in subsets:
        total = ring.zero_vec
        for i in sorted(s):
            total = ring.add_vec(total, idempotents[i].coeffs)
        generated = principal_ideal(ring, total)
        vertices.append(lattice.find(generated.elements) or generated)

    nil = lattice.nilradical.elements
    edges = frozenset(
        (a, b)
        for a, b in itertools.combinations(range(len(vertices)), 2)
        if product_within(vertices[a], vertices[b], nil)
    )
    return NilGraph(
        ring=ring,
        kind=GraphKind.DECOMPOSITION,
        vertices=tuple(vertices),
        edges=edges,
        in_nil=tuple(v.elements <= nil for v in vertices),
        delta=tuple(subsets),
        witnesses=(None,) * len(vertices),
    )


@dataclass(frozen=True)
class DegreeProfile:
    """Actual degrees and, for products of fields, the closed-form prediction."""

    degrees: tuple[int, ...]
    predicted: tuple[int, ...] | None = None

    @property
    def matches(self) -> bool:
        return self.predicted is None or self.predicted == self.degrees

    def mismatches(self) -> list[int]:
        if self.predicted is None:
            return []
        return [i for i, (a, b) in enumerate(zip(self.degrees, self.predicted)) if a != b]


def degree_profile(
    graph: NilGraph, lattice: LatticeReport, *, predict: bool = True
) -> DegreeProfile:
    """Per-vertex degrees plus 2^(n - |delta(I)|) - 1 when R is a product of fields.

    Raises:
        UnsupportedPredictionError: If a prediction is requested for a ring
            that is not a product of fields
    """
    degrees = tuple(graph.degrees())
    if not predict:
        return DegreeProfile(degrees)
    if not lattice.is_reduced:
        raise UnsupportedPredictionError(f"{graph.ring.label} is not a product of fields")
    n = len(lattice.primitive_idempotents)
    predicted = tuple(2 ** (n - len(support)) - 1 for support in graph.delta)
    return DegreeProfile(degrees, predicted)


def annihilator_vertices(lattice: LatticeReport) -> list[Ideal]:
    """Non-zero proper ideals with a non-zero annihilator, the vertices of AG(R)."""
    ring = lattice.ring
    return [
        ideal
        for ideal in lattice.nontrivial_ideals
        if not annihilator(ring, ideal).is_zero
    ]
