"""Simple-graph predicates and exact invariants.

Every function takes a networkx graph. Vacuous conventions: the empty graph
is complete, regular, bipartite and has independence number 0; K_1 is
complete, bipartite, complete bipartite, a star and a tree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import networkx as nx
import structlog

from nilgraph.core.exceptions import ResourceLimitExceeded

logger = structlog.get_logger()

DEFAULT_INDEPENDENCE_MAX_VERTICES = 200


def is_complete(g: nx.Graph) -> bool:
    n = g.number_of_nodes()
    return g.number_of_edges() == n * (n - 1) // 2


def regularity(g: nx.Graph) -> int | None:
    """The common degree r of an r-regular graph, else None (0 for the empty graph)."""
    degrees = {d for _, d in g.degree()}
    if not degrees:
        return 0
    return degrees.pop() if len(degrees) == 1 else None


def is_regular(g: nx.Graph) -> bool:
    return regularity(g) is not None


def bipartition(g: nx.Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """BFS two-colouring, or None when an odd cycle exists."""
    colour: dict[int, int] = {}
    for start in sorted(g.nodes):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v not in colour:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    left = frozenset(v for v, c in colour.items() if c == 0)
    right = frozenset(v for v, c in colour.items() if c == 1)
    return left, right


def odd_cycle(g: nx.Graph) -> list[int] | None:
    """An odd cycle as a vertex list, or None if the graph is bipartite."""
    for start in sorted(g.nodes):
        parent: dict[int, int | None] = {start: None}
        depth = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v not in depth:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif depth[v] == depth[u]:
                    return _join_paths(parent, u, v)
    return None


def _join_paths(parent: dict[int, int | None], u: int, v: int) -> list[int]:
    """Cycle through the edge u-v and the BFS tree paths back to their meeting point."""
    path_u = [u]
    path_v = [v]
    while path_u[-1] != path_v[-1]:
        pu, pv = parent[path_u[-1]], parent[path_v[-1]]
        assert pu is not None and pv is not None
        path_u.append(pu)
        path_v.append(pv)
    return path_u + path_v[-2::-1]


def is_bipartite(g: nx.Graph) -> bool:
    return bipartition(g) is not None


def is_complete_bipartite(g: nx.Graph) -> bool:
    """Bipartite with every cross pair adjacent; needs a connected two-colouring.

    K_1 counts as K_{1,0}. Graphs with isolated vertices beside edges are not
    complete bipartite.
    """
    n = g.number_of_nodes()
    if n <= 1:
        return True
    if not nx.is_connected(g):
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    left, right = parts
    return g.number_of_edges() == len(left) * len(right)


def is_star(g: nx.Graph) -> bool:
    """Complete bipartite with a side of size one (K_1 included)."""
    n = g.number_of_nodes()
    if n <= 1:
        return True
    if not is_complete_bipartite(g):
        return False
    parts = bipartition(g)
    assert parts is not None
    return min(len(parts[0]), len(parts[1])) == 1


def is_tree(g: nx.Graph) -> bool:
    n = g.number_of_nodes()
    if n == 0:
        return False
    return g.number_of_edges() == n - 1 and nx.is_connected(g)


def reduction(g: nx.Graph) -> nx.Graph:
    """Remove every vertex of degree one, in a single pass."""
    pendant = [v for v, d in g.degree() if d == 1]
    reduced = g.copy()
    reduced.remove_nodes_from(pendant)
    return reduced


def iterated_reduction(g: nx.Graph) -> nx.Graph:
    """Repeat ``reduction`` until no vertex of degree one remains."""
    current = g
    while True:
        nxt = reduction(current)
        if nxt.number_of_nodes() == current.number_of_nodes():
            return nxt
        current = nxt


# -- independence number -----------------------------------------------------


@dataclass(frozen=True)
class IndependentSet:
    size: int
    witness: tuple[int, ...]

    def verify(self, g: nx.Graph) -> bool:
        nodes = self.witness
        return len(set(nodes)) == self.size and not any(
            g.has_edge(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1 :]
        )


def greedy_independent_set(g: nx.Graph) -> IndependentSet:
    """Minimum-degree greedy; a lower bound on the independence number."""
    remaining = g.copy()
    chosen: list[int] = []
    while remaining.number_of_nodes():
        v = min(remaining.nodes, key=lambda x: (remaining.degree(x), x))
        chosen.append(v)
        remaining.remove_nodes_from([v, *remaining.neighbors(v)])
    return IndependentSet(len(chosen), tuple(sorted(chosen)))


class _MaxIndependentSet:
    """Branch and bound over bitmasks.

    Branches on a maximum-degree vertex (take it or drop it). The bound on a
    candidate set C with m induced edges and maximum induced degree D is
    |C| - ceil(m / D): every edge needs an endpoint outside the solution and
    each such endpoint covers at most D edges.
    """

    def __init__(self, g: nx.Graph):
        self.nodes = sorted(g.nodes)
        index = {v: i for i, v in enumerate(self.nodes)}
        self.adj = [0] * len(self.nodes)
        for u, v in g.edges:
            self.adj[index[u]] |= 1 << index[v]
            self.adj[index[v]] |= 1 << index[u]
        greedy = greedy_independent_set(g)
        self.best = greedy.size
        self.best_mask = sum(1 << index[v] for v in greedy.witness)

    def solve(self) -> IndependentSet:
        self._branch((1 << len(self.nodes)) - 1, 0, 0)
        witness = tuple(self.nodes[i] for i in range(len(self.nodes)) if self.best_mask >> i & 1)
        return IndependentSet(self.best, witness)

    def _branch(self, cand: int, chosen: int, size: int) -> None:
        # Isolated candidates always belong to some maximum solution.
        isolated = 0
        rest = cand
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if not self.adj[i] & cand:
                isolated |= low
            rest ^= low
        if isolated:
            cand &= ~isolated
            chosen |= isolated
            size += isolated.bit_count()

        if not cand:
            if size > self.best:
                self.best, self.best_mask = size, chosen
            return

        count = cand.bit_count()
        best_v, best_deg, edge_ends = -1, -1, 0
        rest = cand
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            deg = (self.adj[i] & cand).bit_count()
            edge_ends += deg
            if deg > best_deg:
                best_v, best_deg = i, deg
            rest ^= low
        edges = edge_ends // 2
        bound = count - (edges + best_deg - 1) // best_deg
        if size + bound <= self.best:
            return

        bit = 1 << best_v
        self._branch(cand & ~bit & ~self.adj[best_v], chosen | bit, size + 1)
        self._branch(cand & ~bit, chosen, size)


def independence_number(
    g: nx.Graph, max_vertices: int = DEFAULT_INDEPENDENCE_MAX_VERTICES
) -> IndependentSet:
    """Exact independence number with a verified witness.

    Raises:
        ResourceLimitExceeded: If the graph has more than ``max_vertices`` vertices
    """
    n = g.number_of_nodes()
    if n > max_vertices:
        raise ResourceLimitExceeded("graph vertices", max_vertices, actual=n)
    if n == 0:
        return IndependentSet(0, ())
    result = _MaxIndependentSet(g).solve()
    assert result.verify(g), "independent set witness has an edge"
    return result
