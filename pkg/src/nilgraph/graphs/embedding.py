"""Rotation systems, face tracing and embedding searches.

A rotation system fixes a cyclic order of neighbours at every vertex. Faces
are traced dart by dart: after the dart u -> v comes v -> w, where w follows
u in the rotation at v. Euler's formula n - m + f = 2 - 2g then gives the
genus of the embedding.
"""

from __future__ import annotations

import random
import time
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import networkx as nx
import structlog

from nilgraph.core.config import GenusBudget
from nilgraph.core.exceptions import InvalidParameterError

logger = structlog.get_logger()

Dart = tuple[int, int]


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbour order per vertex, stored sorted by vertex."""

    rotations: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Sequence[int]]) -> RotationSystem:
        return cls(tuple((v, tuple(mapping[v])) for v in sorted(mapping)))

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.rotations)

    def validate(self, g: nx.Graph) -> bool:
        """Each cyclic order is a permutation of exactly the incident edges."""
        rot = self.as_dict()
        if set(rot) != set(g.nodes):
            return False
        return all(
            len(order) == len(set(order)) and set(order) == set(g.neighbors(v))
            for v, order in rot.items()
        )

    def to_dict(self) -> dict[str, list[int]]:
        return {str(v): list(order) for v, order in self.rotations}


def count_faces(rot: Mapping[int, Sequence[int]]) -> int:
    """Number of face boundary walks; 1 for a single isolated vertex."""
    pos = {v: {u: i for i, u in enumerate(order)} for v, order in rot.items()}
    seen: set[Dart] = set()
    faces = 0
    for v, order in rot.items():
        for u in order:
            dart = (v, u)
            if dart in seen:
                continue
            faces += 1
            while dart not in seen:
                seen.add(dart)
                a, b = dart
                around = rot[b]
                dart = (b, around[(pos[b][a] + 1) % len(around)])
    return faces if seen else len(rot)


@dataclass(frozen=True)
class FaceTrace:
    faces: int
    genus: int


def euler_genus(n: int, m: int, faces: int) -> int:
    twice = 2 - n + m - faces
    if twice < 0 or twice % 2:
        raise InvalidParameterError("face count", faces, f"a count with 2 - {n} + {m} - f even and >= 0")
    return twice // 2


def trace_faces(g: nx.Graph, rs: RotationSystem) -> FaceTrace:
    """Trace the faces of ``rs`` on the connected graph ``g``.

    Raises:
        InvalidParameterError: If ``g`` is empty or disconnected, or ``rs`` is
            not a rotation system of ``g``
    """
    if g.number_of_nodes() == 0 or not nx.is_connected(g):
        raise InvalidParameterError("graph", "disconnected graph", "a connected graph")
    if not rs.validate(g):
        raise InvalidParameterError("rotation system", "mismatched rotations", "one cyclic order per vertex")
    faces = count_faces(rs.as_dict())
    genus = euler_genus(g.number_of_nodes(), g.number_of_edges(), faces)
    return FaceTrace(faces, genus)


# -- local search ------------------------------------------------------------


def _local_search(
    adj: Mapping[int, Sequence[int]],
    rng: random.Random,
    budget: GenusBudget,
    target_faces: int,
    deadline: float,
) -> tuple[int, dict[int, list[int]]]:
    """Hill climbing on the face count with random restarts.

    A move takes one neighbour out of a rotation and reinserts it elsewhere;
    moves that do not lose faces are kept.
    """
    movable = [v for v in sorted(adj) if len(adj[v]) >= 3]
    best_faces = -1
    best_rot: dict[int, list[int]] = {}
    for _ in range(budget.restarts):
        rot = {v: list(adj[v]) for v in sorted(adj)}
        for v in movable:
            rng.shuffle(rot[v])
        faces = count_faces(rot)
        for _ in range(budget.steps):
            if faces >= target_faces or not movable or time.monotonic() > deadline:
                break
            v = rng.choice(movable)
            order = rot[v]
            i = rng.randrange(len(order))
            j = rng.randrange(len(order) - 1)
            moved = order[:i] + order[i + 1 :]
            moved.insert(j, order[i])
            rot[v] = moved
            new_faces = count_faces(rot)
            if new_faces >= faces:
                faces = new_faces
            else:
                rot[v] = order
        if faces > best_faces:
            best_faces, best_rot = faces, {v: list(o) for v, o in rot.items()}
        if best_faces >= target_faces or time.monotonic() > deadline:
            break
    return best_faces, best_rot


# -- face-tracing branch and bound ------------------------------------------


class _BudgetExhausted(Exception):
    pass


class _FaceTracer:
    """Search for a rotation system with at least ``target`` faces.

    Rotations are built one successor at a time while faces are traced:
    the walk follows known successors and branches only when the successor
    of the current dart at its head vertex is still open. A rotation may only
    close into a cycle once it holds every neighbour. Every face walk has at
    least ``girth`` darts, which bounds the faces still reachable.
    """

    def __init__(
        self,
        adj: Mapping[int, Sequence[int]],
        target: int,
        girth: int,
        node_limit: int,
        deadline: float,
    ):
        self.adj = {v: tuple(adj[v]) for v in sorted(adj)}
        self.darts: list[Dart] = [(u, v) for u in self.adj for v in self.adj[u]]
        self.total = len(self.darts)
        self.target = target
        self.girth = girth
        self.node_limit = node_limit
        self.deadline = deadline
        self.nodes = 0
        self.exhausted = False
        self.nxt: dict[int, dict[int, int]] = {v: {} for v in self.adj}
        self.prv: dict[int, dict[int, int]] = {v: {} for v in self.adj}
        self.traced: set[Dart] = set()
        self.trail: list[Dart] = []
        for v, nbrs in self.adj.items():
            if len(nbrs) == 1:
                self._link(v, nbrs[0], nbrs[0])

    def _link(self, v: int, u: int, w: int) -> None:
        self.nxt[v][u] = w
        self.prv[v][w] = u

    def _unlink(self, v: int, u: int) -> None:
        w = self.nxt[v].pop(u)
        del self.prv[v][w]

    def _mark(self, dart: Dart) -> None:
        self.traced.add(dart)
        self.trail.append(dart)

    def _rewind(self, mark: int) -> None:
        while len(self.trail) > mark:
            self.traced.discard(self.trail.pop())

    def run(self) -> dict[int, tuple[int, ...]] | None:
        if self.total == 0:
            return {v: () for v in self.adj}
        start = self.darts[0]
        self._mark(start)
        try:
            found = self._extend(0, start, start, 1)
        except _BudgetExhausted:
            self.exhausted = True
            return None
        if not found:
            return None
        return {v: self._cycle(v) for v in self.adj}

    def _cycle(self, v: int) -> tuple[int, ...]:
        first = min(self.adj[v])
        order = [first]
        current = self.nxt[v][first]
        while current != first:
            order.append(current)
            current = self.nxt[v][current]
        return tuple(order)

    def _reachable(self, closed: int, walk_len: int) -> int:
        """Upper bound on the final face count with an open walk of ``walk_len`` darts."""
        remaining = self.total - (len(self.traced) - walk_len)
        return closed + 1 + (remaining - max(walk_len, self.girth)) // self.girth

    def _extend(self, closed: int, start: Dart, cur: Dart, walk_len: int) -> bool:
        self.nodes += 1
        if self.nodes > self.node_limit or (
            self.nodes % 1024 == 0 and time.monotonic() > self.deadline
        ):
            raise _BudgetExhausted
        mark = len(self.trail)
        while True:
            u, v = cur
            w = self.nxt[v].get(u)
            if w is None:
                if self._branch(closed, start, cur, walk_len):
                    return True
                self._rewind(mark)
                return False
            dart = (v, w)
            if dart == start:
                closed += 1
                free = self.total - len(self.traced)
                if free == 0:
                    if closed >= self.target:
                        return True
                    self._rewind(mark)
                    return False
                if closed + free // self.girth < self.target:
                    self._rewind(mark)
                    return False
                start = next(d for d in self.darts if d not in self.traced)
                self._mark(start)
                cur, walk_len = start, 1
                continue
            if dart in self.traced:
                self._rewind(mark)
                return False
            self._mark(dart)
            cur, walk_len = dart, walk_len + 1
            if self._reachable(closed, walk_len) < self.target:
                self._rewind(mark)
                return False

    def _branch(self, closed: int, start: Dart, cur: Dart, walk_len: int) -> bool:
        u, v = cur
        head, chain = u, 1
        while head in self.prv[v]:
            head = self.prv[v][head]
            chain += 1
        degree = len(self.adj[v])

        choices = [
            w
            for w in self.adj[v]
            if w not in self.prv[v] and (w != head or chain == degree)
        ]
        # Closing the face now first, then a choice that can close it next step.
        choices.sort(key=lambda w: (0 if (v, w) == start else 1 if w == start[0] else 2))
        for w in choices:
            self._link(v, u, w)
            if self._extend(closed, start, cur, walk_len):
                return True
            self._unlink(v, u)
        return False


# -- upper bound -------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddingResult:
    """An embedding found by search, with its genus and face count."""

    genus: int
    faces: int
    rotation: RotationSystem
    method: str

    def to_dict(self) -> dict[str, object]:
        return {
            "genus": self.genus,
            "faces": self.faces,
            "method": self.method,
            "rotation": self.rotation.to_dict(),
        }


def _extend_pendants(
    g: nx.Graph, core: nx.Graph, rot: Mapping[int, Sequence[int]]
) -> dict[int, tuple[int, ...]]:
    """Put removed degree-one vertices back; the face count does not change."""
    full = {v: list(order) for v, order in rot.items()}
    for p in sorted(set(g.nodes) - set(core.nodes)):
        (anchor,) = tuple(g.neighbors(p))
        full[p] = [anchor]
        full[anchor].append(p)
    return {v: tuple(full[v]) for v in sorted(full)}


def _working_graph(g: nx.Graph) -> nx.Graph:
    pendant = [v for v, d in g.degree() if d == 1]
    if not pendant:
        return g
    core = g.copy()
    core.remove_nodes_from(pendant)
    # Anchors of pendant vertices must survive and stay connected.
    anchors_ok = all(next(iter(g.neighbors(p))) in core for p in pendant)
    if core.number_of_nodes() == 0 or not anchors_ok or not nx.is_connected(core):
        return g
    return core


def genus_upper_bound(
    g: nx.Graph,
    budget: GenusBudget,
    target_genus: int = 1,
) -> EmbeddingResult | None:
    """Best embedding found within ``budget``, stopping early at ``target_genus``.

    Planar graphs return their planar embedding. Otherwise local search runs
    first; if it misses the target, the face-tracing search looks for an
    embedding of genus ``target_genus`` exactly. None means the budget ran out
    before any embedding was found; it never says anything about lower bounds.

    Raises:
        InvalidParameterError: If ``g`` is empty or disconnected
    """
    if g.number_of_nodes() == 0 or not nx.is_connected(g):
        raise InvalidParameterError("graph", "disconnected graph", "a connected graph")
    n, m = g.number_of_nodes(), g.number_of_edges()

    planar, certificate = nx.check_planarity(g)
    if planar:
        rot = RotationSystem.from_mapping(certificate.get_data())
        trace = trace_faces(g, rot)
        return EmbeddingResult(trace.genus, trace.faces, rot, "planarity")

    core = _working_graph(g)
    adj = {v: tuple(sorted(core.neighbors(v))) for v in sorted(core.nodes)}
    cn, cm = core.number_of_nodes(), core.number_of_edges()
    target_faces = 2 - 2 * target_genus - cn + cm
    deadline = time.monotonic() + budget.time_ms / 1000
    rng = random.Random(budget.seed)

    best_faces, best_rot = _local_search(adj, rng, budget, target_faces, deadline)
    method = "local_search"
    if best_faces < target_faces and time.monotonic() <= deadline:
        girth = 4 if nx.is_bipartite(core) else 3
        tracer = _FaceTracer(adj, target_faces, girth, budget.exhaustive_nodes, deadline)
        found = tracer.run()
        logger.debug(
            "Face tracing finished",
            found=found is not None,
            nodes=tracer.nodes,
            exhausted=tracer.exhausted,
        )
        if found is not None:
            best_faces, best_rot, method = count_faces(found), dict(found), "face_tracing"

    if best_faces < 0:
        return None
    rotation = RotationSystem.from_mapping(_extend_pendants(g, core, best_rot))
    trace = trace_faces(g, rotation)
    assert trace.genus == euler_genus(cn, cm, best_faces)
    logger.debug("Embedding found", n=n, m=m, genus=trace.genus, method=method)
    return EmbeddingResult(trace.genus, trace.faces, rotation, method)
