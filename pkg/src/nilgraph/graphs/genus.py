"""Genus classification: exact planarity, obstruction lower bounds, searched upper bounds.

Example:
    ```python
    from nilgraph.core.config import GenusBudget
    from nilgraph.graphs.genus import classify_genus

    verdict = classify_genus(nx.complete_graph(7), GenusBudget(seed=0))
    print(verdict.verdict)  # exactly_1
    ```
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import networkx as nx
import structlog

from nilgraph.core.config import GenusBudget
from nilgraph.core.exceptions import InvalidParameterError
from nilgraph.graphs.embedding import EmbeddingResult, genus_upper_bound, trace_faces
from nilgraph.graphs.planarity import (
    Biclique,
    KuratowskiSubdivision,
    find_biclique,
    is_planar,
    max_clique,
)

logger = structlog.get_logger()

# Bicliques whose genus formula already gives 2, tried in this order.
GENUS_TWO_BICLIQUES: tuple[tuple[int, int], ...] = ((3, 7), (4, 5), (4, 6))
MIN_OBSTRUCTING_CLIQUE = 8


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def genus_formula_complete(n: int) -> int:
    """Genus of K_n: ceil((n - 3)(n - 4) / 12), for n >= 3."""
    if n < 3:
        raise InvalidParameterError("n", n, "an integer >= 3")
    return _ceil_div((n - 3) * (n - 4), 12)


def genus_formula_biclique(m: int, n: int) -> int:
    """Genus of K_{m,n}: ceil((m - 2)(n - 2) / 4), for m, n >= 2."""
    if m < 2 or n < 2:
        raise InvalidParameterError("(m, n)", (m, n), "integers >= 2")
    return _ceil_div((m - 2) * (n - 2), 4)


class VerdictKind(str, Enum):
    EXACTLY = "exactly"
    AT_LEAST = "at_least"
    INTERVAL = "interval"


@dataclass(frozen=True)
class GenusVerdict:
    """exactly(g), at_least(g) or interval(lo, hi)."""

    kind: VerdictKind
    lo: int
    hi: int | None = None

    @classmethod
    def exactly(cls, g: int) -> GenusVerdict:
        return cls(VerdictKind.EXACTLY, g, g)

    @classmethod
    def at_least(cls, g: int) -> GenusVerdict:
        return cls(VerdictKind.AT_LEAST, g, None)

    @classmethod
    def interval(cls, lo: int, hi: int) -> GenusVerdict:
        if hi == lo:
            return cls.exactly(lo)
        return cls(VerdictKind.INTERVAL, lo, hi)

    @property
    def is_exact(self) -> bool:
        return self.kind is VerdictKind.EXACTLY

    def below(self, threshold: int) -> bool | None:
        """Whether the genus is < threshold; None when the bounds straddle it."""
        if self.hi is not None and self.hi < threshold:
            return True
        if self.lo >= threshold:
            return False
        return None

    def compatible(self, other: GenusVerdict) -> bool:
        """Whether some genus value satisfies both verdicts."""
        hi_self = self.hi if self.hi is not None else float("inf")
        hi_other = other.hi if other.hi is not None else float("inf")
        return max(self.lo, other.lo) <= min(hi_self, hi_other)

    def __add__(self, other: GenusVerdict) -> GenusVerdict:
        lo = self.lo + other.lo
        if self.hi is None or other.hi is None:
            return GenusVerdict.at_least(lo)
        return GenusVerdict.interval(lo, self.hi + other.hi)

    def __str__(self) -> str:
        if self.kind is VerdictKind.EXACTLY:
            return f"exactly_{self.lo}"
        if self.kind is VerdictKind.AT_LEAST:
            return f"at_least_{self.lo}"
        return f"interval_{self.lo}_{self.hi}"


@dataclass(frozen=True)
class Evidence:
    """One re-verifiable finding behind a verdict.

    ``kind`` is one of planar, kuratowski, biclique, clique, embedding.
    ``component`` is the sorted vertex tuple of the component it concerns.
    """

    kind: str
    bound: int
    component: tuple[int, ...]
    kuratowski: KuratowskiSubdivision | None = None
    biclique: Biclique | None = None
    clique: tuple[int, ...] = ()
    embedding: EmbeddingResult | None = None

    def verify(self, g: nx.Graph) -> bool:
        sub = g.subgraph(self.component)
        if self.kuratowski is not None:
            return self.kuratowski.verify(sub)
        if self.biclique is not None:
            return self.biclique.verify(sub)
        if self.clique:
            return all(
                sub.has_edge(a, b) for i, a in enumerate(self.clique) for b in self.clique[i + 1 :]
            )
        if self.embedding is not None:
            trace = trace_faces(sub, self.embedding.rotation)
            return trace.faces == self.embedding.faces and trace.genus == self.bound
        return self.kind == "planar" and nx.check_planarity(sub)[0]

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {"kind": self.kind, "bound": self.bound, "component": list(self.component)}
        if self.kuratowski is not None:
            result["kuratowski"] = self.kuratowski.to_dict()
        if self.biclique is not None:
            result["biclique"] = self.biclique.to_dict()
        if self.clique:
            result["clique"] = list(self.clique)
        if self.embedding is not None:
            result["embedding"] = self.embedding.to_dict()
        return result


@dataclass(frozen=True)
class GenusClass:
    """A genus verdict and the evidence that produced it."""

    verdict: GenusVerdict
    evidence: tuple[Evidence, ...] = field(default=())

    def verify(self, g: nx.Graph) -> bool:
        return all(item.verify(g) for item in self.evidence)

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": str(self.verdict),
            "lo": self.verdict.lo,
            "hi": self.verdict.hi,
            "evidence": [item.to_dict() for item in self.evidence],
        }


def _classify_component(
    g: nx.Graph, nodes: tuple[int, ...], budget: GenusBudget
) -> tuple[GenusVerdict, list[Evidence]]:
    sub = nx.Graph(g.subgraph(nodes))
    planarity = is_planar(sub)
    if planarity.planar:
        return GenusVerdict.exactly(0), [Evidence("planar", 0, nodes)]

    evidence = [Evidence("kuratowski", 1, nodes, kuratowski=planarity.kuratowski)]
    lo = 1
    for m, n in GENUS_TWO_BICLIQUES:
        found = find_biclique(sub, m, n)
        if found is not None:
            bound = genus_formula_biclique(m, n)
            evidence.append(Evidence("biclique", bound, nodes, biclique=found))
            lo = max(lo, bound)
            break
    clique = max_clique(sub)
    if len(clique) >= MIN_OBSTRUCTING_CLIQUE:
        bound = genus_formula_complete(len(clique))
        evidence.append(Evidence("clique", bound, nodes, clique=clique))
        lo = max(lo, bound)

    if lo >= 2:
        return GenusVerdict.at_least(lo), evidence

    result = genus_upper_bound(sub, budget, target_genus=lo)
    if result is None:
        return GenusVerdict.at_least(lo), evidence
    assert result.genus >= lo, "embedding search went below an established lower bound"
    evidence.append(Evidence("embedding", result.genus, nodes, embedding=result))
    return GenusVerdict.interval(lo, result.genus), evidence


def classify_genus(g: nx.Graph, budget: GenusBudget | None = None) -> GenusClass:
    """Classify the genus of ``g``, summing over connected components."""
    budget = budget or GenusBudget()
    if g.number_of_nodes() == 0:
        return GenusClass(GenusVerdict.exactly(0))
    verdict = GenusVerdict.exactly(0)
    evidence: list[Evidence] = []
    for component in sorted((tuple(sorted(c)) for c in nx.connected_components(g))):
        part, items = _classify_component(g, component, budget)
        verdict = verdict + part
        evidence.extend(items)
    logger.debug("Genus classified", n=g.number_of_nodes(), m=g.number_of_edges(), verdict=str(verdict))
    return GenusClass(verdict, tuple(evidence))
