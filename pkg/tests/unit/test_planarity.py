"""Tests for planarity certificates and obstruction subgraphs."""

import networkx as nx
import pytest

from nilgraph.census.runner import load_census
from nilgraph.core.exceptions import InvalidParameterError
from nilgraph.graphs.embedding import RotationSystem, trace_faces
from nilgraph.graphs.planarity import (
    euler_bound_allows_planar,
    find_biclique,
    is_planar,
    max_clique,
)


class TestIsPlanar:
    """Tests for the planarity decision."""

    def test_planar_graph(self):
        """Should return a rotation system for K4."""
        result = is_planar(nx.complete_graph(4))
        assert result.planar
        assert result.rotation is not None
        assert result.kuratowski is None

    def test_k5(self):
        """Should certify K5 with a K5 subdivision."""
        g = nx.complete_graph(5)
        result = is_planar(g)
        assert not result.planar
        assert result.kuratowski is not None
        assert result.kuratowski.kind == "K5"
        assert result.kuratowski.verify(g)

    def test_k33(self):
        """Should certify K3,3 with a K3,3 subdivision."""
        g = nx.complete_bipartite_graph(3, 3)
        result = is_planar(g)
        assert result.kuratowski is not None
        assert result.kuratowski.kind == "K3,3"

    def test_petersen(self):
        """Should find a subdivided K3,3 in the Petersen graph."""
        g = nx.petersen_graph()
        result = is_planar(g)
        assert not result.planar
        assert result.kuratowski is not None
        assert result.kuratowski.kind == "K3,3"
        assert result.kuratowski.verify(g)

    def test_certificate_fails_on_other_graph(self):
        """Should not verify a K5 certificate once an edge is missing."""
        g = nx.complete_graph(5)
        certificate = is_planar(g).kuratowski
        assert certificate is not None
        g.remove_edge(0, 1)
        assert not certificate.verify(g)

    def test_disconnected_planar(self):
        """Should accept a planar graph with several components."""
        g = nx.disjoint_union(nx.complete_graph(4), nx.cycle_graph(5))
        assert is_planar(g).planar


class TestEulerBound:
    """Tests for the edge-count planarity bound."""

    def test_bounds(self):
        assert euler_bound_allows_planar(nx.complete_graph(4))
        assert not euler_bound_allows_planar(nx.complete_graph(5))
        assert not euler_bound_allows_planar(nx.complete_bipartite_graph(3, 3))
        assert euler_bound_allows_planar(nx.path_graph(2))


class TestFindBiclique:
    """Tests for the K_{m,n} search."""

    def test_finds_k37(self):
        g = nx.complete_bipartite_graph(3, 7)
        found = find_biclique(g, 3, 7)
        assert found is not None
        assert found.verify(g)
        assert found.to_dict()["n"] == 7

    def test_absent(self):
        assert find_biclique(nx.complete_bipartite_graph(3, 6), 3, 7) is None

    def test_inside_clique(self):
        """Should find a non-induced K4,5 inside K9."""
        g = nx.complete_graph(9)
        found = find_biclique(g, 4, 5)
        assert found is not None
        assert found.verify(g)

    def test_required_vertices(self):
        """Should honour required left and right vertices."""
        g = nx.complete_bipartite_graph(3, 7)
        found = find_biclique(g, 3, 7, required_left=[0], required_right=[5])
        assert found is not None
        assert 0 in found.left
        assert 5 in found.right

    def test_rejects_bad_shape(self):
        with pytest.raises(InvalidParameterError):
            find_biclique(nx.complete_graph(4), 3, 2)


class TestMaxClique:
    def test_clique_size(self):
        g = nx.disjoint_union(nx.complete_graph(8), nx.cycle_graph(5))
        assert len(max_clique(g)) == 8

    def test_empty(self):
        assert max_clique(nx.Graph()) == ()


RANDOM_GRAPHS = [
    nx.gnp_random_graph(3 + seed % 10, (seed % 19 + 1) / 20, seed=seed) for seed in range(500)
]

CENSUS_UP_TO_256 = [
    pytest.param(entry.spec, id=entry.label)
    for entry in load_census("default")
    if entry.spec.order <= 256
]


def _assert_certificate(g: nx.Graph) -> None:
    result = is_planar(g)
    assert result.planar == nx.check_planarity(g)[0]
    if result.planar:
        assert result.kuratowski is None
        assert result.rotation is not None
        assert result.rotation.validate(g)
        rotations = result.rotation.as_dict()
        for component in nx.connected_components(g):
            part = RotationSystem.from_mapping({v: rotations[v] for v in component})
            assert trace_faces(g.subgraph(component), part).genus == 0
        assert euler_bound_allows_planar(g)
    else:
        assert result.kuratowski is not None
        assert result.kuratowski.verify(g)


class TestPlanarityCrossCheck:
    """Planarity certificates against Euler's bound and face tracing."""

    @pytest.mark.parametrize("seed", range(len(RANDOM_GRAPHS)))
    def test_random_graphs(self, seed):
        """Should trace every planar rotation to genus 0 and keep Euler's bound."""
        _assert_certificate(RANDOM_GRAPHS[seed])

    @pytest.mark.parametrize("spec", CENSUS_UP_TO_256)
    def test_census_nil_graphs(self, spec, census_graphs):
        """Should certify every census nil-graph and its unit variant."""
        graphs = census_graphs(spec)
        _assert_certificate(graphs.nil.graph)
        _assert_certificate(graphs.nil_unit.graph)

    def test_random_graphs_cover_both_verdicts(self):
        verdicts = {is_planar(g).planar for g in RANDOM_GRAPHS}
        assert verdicts == {True, False}
