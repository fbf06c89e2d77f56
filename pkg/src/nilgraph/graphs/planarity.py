"""Planarity with certificates, and the obstruction subgraphs used as genus lower bounds."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx
import structlog

from nilgraph.core.exceptions import InvalidParameterError
from nilgraph.graphs.embedding import RotationSystem, trace_faces

logger = structlog.get_logger()


@dataclass(frozen=True)
class KuratowskiSubdivision:
    """A subdivision of K_5 or K_{3,3}: branch vertices joined by internally disjoint paths."""

    kind: str  # "K5" or "K3,3"
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def verify(self, g: nx.Graph) -> bool:
        branch = set(self.branch_vertices)
        expected = {"K5": (5, 10), "K3,3": (6, 9)}.get(self.kind)
        if expected is None or len(branch) != expected[0] or len(self.paths) != expected[1]:
            return False
        interior: set[int] = set()
        ends: set[frozenset[int]] = set()
        for path in self.paths:
            if len(path) < 2 or path[0] not in branch or path[-1] not in branch:
                return False
            inner = path[1:-1]
            if branch & set(inner) or interior & set(inner) or len(set(inner)) != len(inner):
                return False
            interior.update(inner)
            if not all(g.has_edge(a, b) for a, b in itertools.pairwise(path)):
                return False
            ends.add(frozenset((path[0], path[-1])))
        if len(ends) != len(self.paths):
            return False
        if self.kind == "K5":
            return all(frozenset(p) in ends for p in itertools.combinations(branch, 2))
        skeleton = nx.Graph(tuple(e) for e in ends)
        if not nx.is_connected(skeleton) or not nx.is_bipartite(skeleton):
            return False
        left, right = nx.bipartite.sets(skeleton)
        return len(left) == 3 and len(right) == 3

    def to_dict(self) -> dict[str, object]:
        return {
            "kind": self.kind,
            "branch_vertices": list(self.branch_vertices),
            "paths": [list(p) for p in self.paths],
        }


@dataclass(frozen=True)
class PlanarityResult:
    """Planarity decision with a rotation system (planar) or a Kuratowski subdivision."""

    planar: bool
    rotation: RotationSystem | None = None
    kuratowski: KuratowskiSubdivision | None = None


def _subdivision_from(counterexample: nx.Graph) -> KuratowskiSubdivision:
    """Read branch vertices and paths off a minimal Kuratowski subgraph."""
    branch = sorted(v for v, d in counterexample.degree() if d >= 3)
    branch_set = set(branch)
    paths: dict[frozenset[int], tuple[int, ...]] = {}
    for b in branch:
        for first in sorted(counterexample.neighbors(b)):
            path = [b, first]
            while path[-1] not in branch_set:
                prev, here = path[-2], path[-1]
                path.append(next(x for x in counterexample.neighbors(here) if x != prev))
            key = frozenset((path[0], path[-1]))
            candidate = tuple(path) if path[0] < path[-1] else tuple(reversed(path))
            if key not in paths or candidate < paths[key]:
                paths[key] = candidate
    kind = "K5" if len(branch) == 5 else "K3,3"
    return KuratowskiSubdivision(kind, tuple(branch), tuple(sorted(paths.values())))


def is_planar(g: nx.Graph) -> PlanarityResult:
    """Decide planarity; the certificate is re-verified before returning."""
    planar, certificate = nx.check_planarity(g, counterexample=True)
    if planar:
        rotation = RotationSystem.from_mapping(certificate.get_data())
        for component in nx.connected_components(g):
            sub = g.subgraph(component)
            part = RotationSystem.from_mapping({v: rotation.as_dict()[v] for v in component})
            assert trace_faces(sub, part).genus == 0
        return PlanarityResult(True, rotation=rotation)
    subdivision = _subdivision_from(certificate)
    assert subdivision.verify(g), "Kuratowski certificate failed verification"
    return PlanarityResult(False, kuratowski=subdivision)


def euler_bound_allows_planar(g: nx.Graph) -> bool:
    """Necessary condition m <= 3n - 6 (m <= 2n - 4 when bipartite) for n >= 3."""
    n, m = g.number_of_nodes(), g.number_of_edges()
    if n < 3:
        return True
    if nx.is_bipartite(g):
        return m <= 2 * n - 4
    return m <= 3 * n - 6


# -- bicliques and cliques ---------------------------------------------------


@dataclass(frozen=True)
class Biclique:
    """Disjoint vertex sides with every cross pair adjacent (not necessarily induced)."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    def verify(self, g: nx.Graph) -> bool:
        if set(self.left) & set(self.right):
            return False
        return all(g.has_edge(a, b) for a in self.left for b in self.right)

    def to_dict(self) -> dict[str, object]:
        return {"m": len(self.left), "n": len(self.right), "left": list(self.left), "right": list(self.right)}


def find_biclique(
    g: nx.Graph,
    m: int,
    n: int,
    required_left: Sequence[int] = (),
    required_right: Sequence[int] = (),
) -> Biclique | None:
    """A K_{m,n} subgraph, or None after exhausting every left side.

    Left sides are built from vertices of degree >= n in decreasing degree
    order while the common neighbourhood is kept; it must stay large enough
    for the right side.
    """
    if m < 1 or n < m:
        raise InvalidParameterError("(m, n)", (m, n), "1 <= m <= n")
    req_left = list(dict.fromkeys(required_left))
    req_right = set(required_right)
    if len(req_left) > m or len(req_right) > n or set(req_left) & req_right:
        return None

    nbrs = {v: set(g.neighbors(v)) for v in g.nodes}
    common: set[int] = set(g.nodes)
    for v in req_left:
        common &= nbrs[v]
    if not req_right <= common or len(common - set(req_left)) < n:
        return None

    pool = sorted(
        (v for v in g.nodes if len(nbrs[v]) >= n and v not in req_left and v not in req_right),
        key=lambda v: (-len(nbrs[v]), v),
    )

    def extend(left: list[int], shared: set[int], start: int) -> Biclique | None:
        if len(left) == m:
            extra = sorted(shared - req_right)[: n - len(req_right)]
            right = tuple(sorted(req_right | set(extra)))
            return Biclique(tuple(sorted(left)), right)
        for idx in range(start, len(pool)):
            v = pool[idx]
            narrowed = shared & nbrs[v]
            if len(narrowed) < n or not req_right <= narrowed:
                continue
            found = extend([*left, v], narrowed, idx + 1)
            if found is not None:
                return found
        return None

    result = extend(req_left, common, 0)
    if result is not None:
        assert result.verify(g)
    return result


def max_clique(g: nx.Graph) -> tuple[int, ...]:
    """A maximum clique, by networkx's exact branch and bound."""
    if g.number_of_nodes() == 0:
        return ()
    clique, _ = nx.max_weight_clique(g, weight=None)
    return tuple(sorted(clique))
