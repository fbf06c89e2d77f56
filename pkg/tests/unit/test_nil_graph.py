"""Tests for AG_N(R), AG(R) and G_T(R)."""

import pytest

from nilgraph.census.runner import load_census
from nilgraph.core.exceptions import InvalidParameterError, UnsupportedPredictionError
from nilgraph.graphs.analysis import reduction
from nilgraph.graphs.nil_graph import (
    GraphKind,
    annihilator_vertices,
    build_ag_graph,
    build_nil_graph,
    degree_profile,
    t_subgraph,
)
from nilgraph.rings.ideals import analyze_lattice
from nilgraph.rings.ring import direct_product, make_gf, make_zmod


CENSUS_UP_TO_256 = [
    pytest.param(entry.spec, id=entry.label)
    for entry in load_census("default")
    if entry.spec.order <= 256
]


def _nil_graph(ring):
    return build_nil_graph(ring, analyze_lattice(ring))


class TestBuildNilGraph:
    """Tests for the nil-graph construction."""

    def test_z6_is_k2(self, z6):
        """Should join (2) and (3) in Z6."""
        graph = _nil_graph(z6)
        assert graph.order == 2
        assert graph.size == 1
        assert graph.labels() == ["(3)", "(2)"]
        assert graph.kind is GraphKind.NIL

    def test_z8_is_k2_inside_nil(self, z8):
        """Should build K2 with both vertices nilpotent."""
        graph = _nil_graph(z8)
        assert (graph.order, graph.size) == (2, 1)
        assert all(graph.in_nil)

    def test_z4_is_k1(self):
        """Should keep (2) in Z4 through its self-product."""
        graph = _nil_graph(make_zmod(4))
        assert (graph.order, graph.size) == (1, 0)

    def test_field_is_empty(self):
        """Should give a field the empty graph."""
        graph = _nil_graph(make_gf(2, 2))
        assert graph.order == 0
        assert graph.graph.number_of_nodes() == 0

    def test_three_fields(self, z30):
        """Should join ideals with disjoint supports in Z30."""
        graph = _nil_graph(z30)
        assert (graph.order, graph.size) == (6, 6)
        assert graph.degree_histogram() == {1: 3, 3: 3}
        for a in range(graph.order):
            for b in range(a + 1, graph.order):
                assert graph.adjacent(a, b) == (not graph.delta[a] & graph.delta[b])

    def test_four_fields_reduction(self):
        """Should drop the four degree-one vertices of AG_N(Z210)."""
        graph = _nil_graph(make_zmod(210))
        assert (graph.order, graph.size) == (14, 25)
        reduced = reduction(graph.graph)
        assert (reduced.number_of_nodes(), reduced.number_of_edges()) == (10, 21)

    def test_nil_vertices_are_universal(self):
        """Should join (6) to every other vertex of AG_N(Z12)."""
        graph = _nil_graph(make_zmod(12))
        nil_index = next(i for i, flag in enumerate(graph.in_nil) if flag)
        assert graph.degrees()[nil_index] == graph.order - 1
        assert graph.size == 5

    def test_networkx_view(self, z6):
        """Should carry labels on networkx nodes."""
        g = _nil_graph(z6).graph
        assert g.nodes[0]["label"] == "(3)"
        assert g.has_edge(0, 1)

    def test_index_of(self, z6):
        """Should find a vertex by its ideal."""
        graph = _nil_graph(z6)
        assert graph.index_of(graph.vertices[1]) == 1

    def test_unit_ideal_vertex(self, z8):
        """Should join R to the vertices inside Nil(R)."""
        graph = build_nil_graph(z8, analyze_lattice(z8), include_unit_ideal=True)
        assert (graph.order, graph.size) == (3, 3)
        assert graph.vertices[-1].is_unit

    def test_rejects_foreign_lattice(self, z6, z8):
        """Should refuse a lattice of another ring."""
        with pytest.raises(InvalidParameterError):
            build_nil_graph(z6, analyze_lattice(z8))


class TestAnnihilatingGraph:
    """Tests for AG(R)."""

    def test_z8(self, z8):
        """Should join (2) and (4) but not (2) with itself."""
        graph = build_ag_graph(z8, analyze_lattice(z8))
        assert (graph.order, graph.size) == (2, 1)

    @pytest.mark.parametrize("spec", CENSUS_UP_TO_256)
    def test_subgraph_of_nil_graph(self, spec, census_graphs):
        """Should put every edge of AG(R) into AG_N(R) on the same vertices."""
        graphs = census_graphs(spec)
        assert graphs.ag.vertices == graphs.nil.vertices
        assert set(graphs.ag.edges) <= set(graphs.nil.edges)

    def test_annihilator_vertices(self, z6):
        """Should list the ideals with a non-zero annihilator."""
        assert len(annihilator_vertices(analyze_lattice(z6))) == 2


class TestDecompositionSubgraph:
    """Tests for G_T(R)."""

    def test_three_fields(self, z30):
        """Should have one vertex per proper non-empty index set."""
        graph = t_subgraph(z30, analyze_lattice(z30))
        assert (graph.order, graph.size) == (6, 6)
        assert graph.kind is GraphKind.DECOMPOSITION

    def test_with_unit_ideal(self, z30):
        """Should add R as an isolated vertex when R is reduced."""
        graph = t_subgraph(z30, analyze_lattice(z30), include_unit_ideal=True)
        assert (graph.order, graph.size) == (7, 6)
        assert graph.delta[-1] == frozenset({0, 1, 2})


class TestDegreeProfile:
    """Tests for the product-of-fields degree formula."""

    @pytest.mark.parametrize(
        "build",
        [
            pytest.param(lambda: make_zmod(6), id="Z6"),
            pytest.param(lambda: make_zmod(30), id="Z30"),
            pytest.param(lambda: make_zmod(210), id="Z210"),
            pytest.param(lambda: make_zmod(2310), id="Z2310", marks=pytest.mark.slow),
            pytest.param(lambda: direct_product([make_gf(2, 2), make_gf(3)]), id="GF(4)*GF(3)"),
        ],
    )
    def test_matches_on_fields(self, build):
        """Should predict 2^(n - |delta|) - 1 for every vertex."""
        ring = build()
        lattice = analyze_lattice(ring)
        profile = degree_profile(build_nil_graph(ring, lattice), lattice)
        assert profile.matches
        assert profile.mismatches() == []

    def test_unsupported_for_non_reduced(self, z8):
        """Should refuse a prediction for a non-reduced ring."""
        lattice = analyze_lattice(z8)
        with pytest.raises(UnsupportedPredictionError):
            degree_profile(build_nil_graph(z8, lattice), lattice)

    def test_no_prediction(self, z8):
        """Should return bare degrees when no prediction is requested."""
        lattice = analyze_lattice(z8)
        profile = degree_profile(build_nil_graph(z8, lattice), lattice, predict=False)
        assert profile.degrees == (1, 1)
        assert profile.matches
