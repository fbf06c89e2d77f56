"""Theorem checks over one analyzed ring.

Each check evaluates both sides of a classification statement from
independently computed quantities (lattice, graph predicates, genus
verdict) and returns a ``TheoremVerdict``. Fields are never applicable:
their graph is empty and every statement assumes a ring with zero divisors.

Failures matching a registered erratum keep status ``fail`` but carry the
erratum text, so census summaries separate them from unexpected failures.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import structlog

from nilgraph.census.spec import PolyQuotientSpec, RingSpec
from nilgraph.core.exceptions import InvalidParameterError
from nilgraph.core.types import THEOREM_IDS, CensusSummary, TheoremVerdict, VerdictStatus
from nilgraph.graphs.analysis import (
    is_bipartite,
    is_complete,
    is_complete_bipartite,
    is_star,
    is_tree,
    odd_cycle,
    regularity,
)
from nilgraph.graphs.genus import GenusClass
from nilgraph.graphs.nil_graph import NilGraph, degree_profile
from nilgraph.graphs.planarity import find_biclique
from nilgraph.rings.ideals import principal_ideal

if TYPE_CHECKING:
    from nilgraph.census.analyze import RingAnalysis
    from nilgraph.core.config import NilGraphConfig

logger = structlog.get_logger()

Check = Callable[["RingAnalysis"], TheoremVerdict]


def _na(theorem_id: str, reason: str, **details: Any) -> TheoremVerdict:
    return TheoremVerdict(theorem_id, VerdictStatus.NOT_APPLICABLE, details, reason=reason)


def _decide(
    theorem_id: str, holds: bool, details: dict[str, Any], counterexample: dict[str, Any]
) -> TheoremVerdict:
    if holds:
        return TheoremVerdict(theorem_id, VerdictStatus.PASS, details)
    return TheoremVerdict(theorem_id, VerdictStatus.FAIL, details, counterexample=counterexample)


def _nontrivial_counts(analysis: RingAnalysis) -> list[int]:
    return sorted(f.nontrivial_ideals for f in analysis.lattice.local_factors)


def _genus_details(genus: GenusClass) -> dict[str, Any]:
    return {"genus": str(genus.verdict), "genus_lo": genus.verdict.lo, "genus_hi": genus.verdict.hi}


# -- completeness, degrees, bipartiteness -------------------------------------


def check_completeness(analysis: RingAnalysis) -> TheoremVerdict:
    """AG_N(R) is complete iff R is local or a product of two fields."""
    lattice = analysis.lattice
    g = analysis.nil_graph.graph
    complete = is_complete(g)
    local = lattice.is_local
    two_fields = lattice.is_reduced and len(lattice.maximal) == 2
    details = {
        "complete": complete,
        "local": local,
        "two_fields": two_fields,
        "max_ideals": len(lattice.maximal),
    }
    missing = next(
        ((a, b) for a, b in itertools.combinations(sorted(g.nodes), 2) if not g.has_edge(a, b)),
        None,
    )
    counterexample: dict[str, Any] = {"complete": complete, "local": local, "two_fields": two_fields}
    if missing is not None:
        labels = analysis.nil_graph.labels()
        counterexample["non_adjacent"] = [labels[missing[0]], labels[missing[1]]]
    return _decide("T2.1", complete == (local or two_fields), details, counterexample)


def check_nil_universal(analysis: RingAnalysis) -> TheoremVerdict:
    """Every vertex inside Nil(R) is adjacent to every other vertex."""
    graph = analysis.nil_graph
    degrees = graph.degrees()
    nil_vertices = [i for i in range(graph.order) if graph.in_nil[i]]
    short = [i for i in nil_vertices if degrees[i] != graph.order - 1]
    details = {"nil_vertices": len(nil_vertices), "universal": len(nil_vertices) - len(short)}
    counterexample: dict[str, Any] = {}
    if short:
        i = short[0]
        counterexample = {
            "vertex": graph.vertices[i].label(),
            "degree": degrees[i],
            "expected": graph.order - 1,
        }
    return _decide("R2.3", not short, details, counterexample)


def check_regular(analysis: RingAnalysis) -> TheoremVerdict:
    """A regular AG_N(R) is complete; products of fields obey the degree formula."""
    lattice = analysis.lattice
    graph = analysis.nil_graph
    r = regularity(graph.graph)
    complete = is_complete(graph.graph)
    details: dict[str, Any] = {"regular": r is not None, "degree": r, "complete": complete}
    counterexample: dict[str, Any] = {}
    holds = r is None or complete
    if not holds:
        counterexample = {"regular_degree": r, "order": graph.order}

    if lattice.is_reduced:
        profile = degree_profile(graph, lattice)
        predicted = profile.predicted or ()
        labels = graph.labels()
        wrong = [
            {"vertex": labels[i], "degree": profile.degrees[i], "predicted": predicted[i]}
            for i in profile.mismatches()
        ]
        details["degree_formula"] = "checked"
        details["degree_mismatches"] = len(wrong)
        if wrong:
            holds = False
            counterexample = {"degree_mismatch": wrong[0]}
    else:
        details["degree_formula"] = "not a product of fields"
    return _decide("T2.5", holds, details, counterexample)


def check_bipartite(analysis: RingAnalysis) -> TheoremVerdict:
    """Bipartite implies complete bipartite; non-reduced adds star and a unique minimal prime."""
    lattice = analysis.lattice
    g = analysis.nil_graph.graph
    if not is_bipartite(g):
        cycle = odd_cycle(g) or []
        return TheoremVerdict(
            "T2.6", VerdictStatus.PASS, {"bipartite": False, "odd_cycle_length": len(cycle)}
        )
    complete_bip = is_complete_bipartite(g)
    details: dict[str, Any] = {"bipartite": True, "complete_bipartite": complete_bip}
    holds = complete_bip
    if not lattice.is_reduced:
        star = is_star(g)
        unique_min = (
            len(lattice.minimal_primes) == 1 and lattice.minimal_primes[0] == lattice.nilradical
        )
        details.update(star=star, nil_is_unique_minimal_prime=unique_min)
        holds = holds and star and unique_min
    counterexample = {k: v for k, v in details.items() if v is False}
    return _decide("T2.6", holds, details, counterexample)


def check_tree(analysis: RingAnalysis) -> TheoremVerdict:
    """A tree nil-graph is a star."""
    g = analysis.nil_graph.graph
    tree = is_tree(g)
    star = is_star(g) if tree else None
    details = {"tree": tree, "star": star}
    return _decide("C2.7", not tree or bool(star), details, {"tree": True, "star": False})


def check_bipartite_small(analysis: RingAnalysis) -> TheoremVerdict:
    """For finite rings, bipartite iff the graph is K_1 or K_2."""
    g = analysis.nil_graph.graph
    bipartite = is_bipartite(g)
    small_complete = is_complete(g) and g.number_of_nodes() in (1, 2)
    details = {"bipartite": bipartite, "k1_or_k2": small_complete, "order": g.number_of_nodes()}
    return _decide("C2.8", bipartite == small_complete, details, dict(details))


# -- independence numbers ------------------------------------------------------


def check_decomposition_alpha(analysis: RingAnalysis) -> TheoremVerdict:
    """G_T(R) has independence number 2^(n-1) once R counts as a vertex.

    Without R the value is 2^(n-1) - 1. Adjacency in G_T(R) is disjointness
    of idempotent supports.
    """
    n = len(analysis.lattice.primitive_idempotents)
    expected_unit = 2 ** (n - 1)
    t_unit = analysis.t_unit
    support_rule = all(
        t_unit.adjacent(a, b) == (not t_unit.delta[a] & t_unit.delta[b])
        for a, b in itertools.combinations(range(t_unit.order), 2)
    )
    details = {
        "factors": n,
        "alpha_unit": analysis.alpha_t_unit.size,
        "alpha_strict": analysis.alpha_t_strict.size,
        "expected_unit": expected_unit,
        "expected_strict": expected_unit - 1,
        "support_rule": support_rule,
    }
    holds = (
        analysis.alpha_t_unit.size == expected_unit
        and analysis.alpha_t_strict.size == expected_unit - 1
        and support_rule
    )
    counterexample = {
        "alpha_unit": analysis.alpha_t_unit.size,
        "alpha_strict": analysis.alpha_t_strict.size,
        "witness": [t_unit.vertices[i].label() for i in analysis.alpha_t_unit.witness],
        "support_rule": support_rule,
    }
    return _decide("P3.1", holds, details, counterexample)


def check_alpha_bound(analysis: RingAnalysis) -> TheoremVerdict:
    """alpha >= 2^(n-1) with n = |Max(R)|, with equality iff R is reduced (unit convention)."""
    lattice = analysis.lattice
    n = len(lattice.maximal)
    bound = 2 ** (n - 1)
    alpha = analysis.alpha_unit.size
    details = {
        "max_ideals": n,
        "alpha_unit": alpha,
        "alpha_strict": analysis.alpha_strict.size,
        "bound": bound,
        "reduced": lattice.is_reduced,
    }
    holds = alpha >= bound and (alpha == bound) == lattice.is_reduced
    counterexample = {
        "alpha_unit": alpha,
        "bound": bound,
        "reduced": lattice.is_reduced,
        "witness": [analysis.unit_graph.vertices[i].label() for i in analysis.alpha_unit.witness],
    }
    return _decide("C3.2", holds, details, counterexample)


def check_reduced_alpha(analysis: RingAnalysis) -> TheoremVerdict:
    """Reduced R: alpha = 2^(|Min(R)| - 1) under the unit convention."""
    lattice = analysis.lattice
    if not lattice.is_reduced:
        return _na("T3.6", "R is not reduced")
    k = len(lattice.minimal_primes)
    expected = 2 ** (k - 1)
    details = {
        "min_primes": k,
        "alpha_unit": analysis.alpha_unit.size,
        "alpha_strict": analysis.alpha_strict.size,
        "expected_unit": expected,
        "expected_strict": expected - 1,
    }
    holds = analysis.alpha_unit.size == expected and analysis.alpha_strict.size == expected - 1
    return _decide("T3.6", holds, details, dict(details))


def check_min_primes_log(analysis: RingAnalysis) -> TheoremVerdict:
    """Reduced R: |Min(R)| = |Max(T(R))| = log2(alpha) + 1.

    T(R) is not built: a finite reduced ring is its own total quotient ring,
    so |Max(T(R))| = |Max(R)|.
    """
    lattice = analysis.lattice
    if not lattice.is_reduced:
        return _na("C3.7", "R is not reduced")
    alpha = analysis.alpha_unit.size
    k = len(lattice.minimal_primes)
    max_total = len(lattice.maximal)
    log_alpha = math.log2(alpha) if alpha > 0 else None
    exponent = int(log_alpha) if log_alpha is not None and log_alpha.is_integer() else None
    details = {
        "min_primes": k,
        "max_total_quotient": max_total,
        "alpha_unit": alpha,
        "log2_alpha": log_alpha,
        "printed_identity_holds": exponent == k,
    }
    holds = exponent is not None and k == max_total == exponent + 1
    return _decide("C3.7", holds, details, dict(details))


# -- genus -------------------------------------------------------------------


def check_reduction_genus(analysis: RingAnalysis) -> TheoremVerdict:
    """Removing degree-one vertices does not change the genus verdict."""
    full, reduced = analysis.genus.verdict, analysis.reduced_genus.verdict
    details = {"genus": str(full), "reduced_genus": str(reduced)}
    if full.is_exact and reduced.is_exact:
        holds = full.lo == reduced.lo
    else:
        holds = full.compatible(reduced)
    return _decide("L4.2", holds, details, dict(details))


def genus_below_two_predicted(max_ideals: int, counts: Sequence[int]) -> bool:
    """Whether the local factor shape allows genus < 2.

    ``counts`` are the non-trivial ideal counts of the local factors.
    """
    t = sorted(counts)
    if max_ideals >= 5:
        return False
    if max_ideals == 4:
        return all(c == 0 for c in t)
    if max_ideals == 3:
        return t[0] == 0 and t[1] == 0 and t[2] <= 2
    if max_ideals == 2:
        return (t[0] == 0 and t[1] <= 3) or t[1] <= 1
    return t[0] <= 7


def planar_predicted(max_ideals: int, counts: Sequence[int]) -> bool:
    """Whether the local factor shape makes the nil-graph planar."""
    t = sorted(counts)
    if max_ideals == 3:
        return all(c == 0 for c in t)
    if max_ideals == 2:
        return t[0] == 0 and t[1] <= 1
    if max_ideals == 1:
        return t[0] <= 4
    return False


def check_genus_below_two(analysis: RingAnalysis) -> TheoremVerdict:
    """Genus < 2 forces |Max(R)| <= 4 and a local factor shape per |Max(R)|."""
    n = len(analysis.lattice.maximal)
    counts = _nontrivial_counts(analysis)
    predicted = genus_below_two_predicted(n, counts)
    actual = analysis.genus.verdict.below(2)
    details = {
        "max_ideals": n,
        "nontrivial_counts": counts,
        "predicted_below_two": predicted,
        **_genus_details(analysis.genus),
    }
    if actual is None:
        return _na("T4.4", "genus bounds straddle 2", **details)
    details["below_two"] = actual
    return _decide("T4.4", actual == predicted, details, dict(details))


def check_planar(analysis: RingAnalysis) -> TheoremVerdict:
    """Planar iff three fields, a field times a factor with <= 1 ideal, or local with <= 4."""
    n = len(analysis.lattice.maximal)
    counts = _nontrivial_counts(analysis)
    predicted = planar_predicted(n, counts)
    actual = analysis.genus.verdict.below(1)
    details = {
        "max_ideals": n,
        "nontrivial_counts": counts,
        "predicted_planar": predicted,
        **_genus_details(analysis.genus),
    }
    if actual is None:
        return _na("C4.5", "genus bounds straddle 1", **details)
    details["planar"] = actual
    return _decide("C4.5", actual == predicted, details, dict(details))


# -- the K_{3,7} examples -------------------------------------------------------


@dataclass(frozen=True)
class _ExampleFamily:
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]


# Ascending coefficient tuples of the listed generators.
_Z6_FAMILY = _ExampleFamily(
    left=((3, 0), (0, 3), (3, 3)),
    right=((2, 0), (4, 0), (0, 2), (0, 4), (2, 2), (2, 4), (4, 2)),
)
_Z4_CUBIC_FAMILY = _ExampleFamily(
    left=((0, 2, 0), (0, 0, 2), (0, 2, 2)),
    right=((2, 0, 0), (2, 0, 1), (2, 0, 2), (2, 0, 3), (2, 2, 0), (2, 2, 1), (2, 2, 2)),
)


def _example_family(spec: RingSpec) -> _ExampleFamily | None:
    ast = spec.ast
    if not isinstance(ast, PolyQuotientSpec):
        return None
    degree = len(ast.coeffs) - 1
    if any(ast.coeffs[:-1]):
        return None
    if ast.m == 6 and degree >= 2:
        return _ExampleFamily(
            left=tuple(c + (0,) * (degree - 2) for c in _Z6_FAMILY.left),
            right=tuple(c + (0,) * (degree - 2) for c in _Z6_FAMILY.right),
        )
    if ast.m == 4 and degree == 3:
        return _Z4_CUBIC_FAMILY
    return None


def groups_joined(
    graph: NilGraph, left: Sequence[int | None], right: Sequence[int | None]
) -> bool:
    """Every left vertex is a different vertex adjacent to every right vertex.

    A listed ideal that lands on the same vertex in both groups breaks the
    join, even when its square lies in Nil(R).
    """
    return all(
        i is not None and j is not None and i != j and graph.adjacent(i, j)
        for i, j in itertools.product(left, right)
    )


def check_biclique_examples(analysis: RingAnalysis) -> TheoremVerdict:
    """The listed ideals are vertices, the two groups are joined, and a K_{3,7} exists."""
    family = _example_family(analysis.spec)
    if family is None:
        return _na("E4.6", "not one of the K_{3,7} example rings")
    ring, lattice, graph = analysis.ring, analysis.lattice, analysis.nil_graph

    def locate(coeffs: tuple[int, ...]) -> tuple[str, int | None]:
        vec = ring.reduce(coeffs)
        ideal = lattice.find(principal_ideal(ring, vec).elements)
        index = graph.index_of(ideal) if ideal is not None else None
        return f"({ring.format_vec(vec)})", index

    left = [locate(c) for c in family.left]
    right = [locate(c) for c in family.right]
    listed = left + right
    indices = [index for _, index in listed]
    all_vertices = all(index is not None for index in indices)
    coinciding = [
        [a[0], b[0]]
        for a, b in itertools.combinations(listed, 2)
        if a[1] is not None and a[1] == b[1]
    ]
    joined = groups_joined(graph, [i for _, i in left], [j for _, j in right])
    biclique = find_biclique(graph.graph, 3, 7)
    at_least_two = analysis.genus.verdict.lo >= 2
    details = {
        "listed": len(listed),
        "distinct": len({i for i in indices if i is not None}),
        "coinciding": coinciding,
        "all_vertices": all_vertices,
        "groups_joined": joined,
        "k37_found": biclique is not None,
        "vertices": graph.order,
        **_genus_details(analysis.genus),
    }
    holds = all_vertices and joined and biclique is not None and at_least_two
    counterexample = {
        "coinciding": coinciding,
        "vertices": graph.order,
        "k37_found": biclique is not None,
        "genus": str(analysis.genus.verdict),
    }
    return _decide("E4.6", holds, details, counterexample)


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class KnownErratum:
    """A statement known to fail on a class of rings, with the explanation."""

    theorem_id: str
    applies: Callable[[RingAnalysis], bool]
    explanation: str


def _local_non_reduced(analysis: RingAnalysis) -> bool:
    return analysis.lattice.is_local and not analysis.lattice.is_reduced


def _z6_square(analysis: RingAnalysis) -> bool:
    ast = analysis.spec.ast
    return isinstance(ast, PolyQuotientSpec) and ast.m == 6 and ast.coeffs == (0, 0, 1)


KNOWN_ERRATA: tuple[KnownErratum, ...] = (
    KnownErratum(
        "C3.2",
        _local_non_reduced,
        "a local non-reduced ring has a complete nil-graph, so alpha = 1 = 2^0 "
        "although R is not reduced",
    ),
    KnownErratum(
        "E4.6",
        _z6_square,
        "for x^2 the listed generators collapse to 7 distinct vertices; the ring is a "
        "product of two local rings with one non-trivial ideal each and has genus 1",
    ),
)


CHECKS: dict[str, Check] = {
    "T2.1": check_completeness,
    "R2.3": check_nil_universal,
    "T2.5": check_regular,
    "T2.6": check_bipartite,
    "C2.7": check_tree,
    "C2.8": check_bipartite_small,
    "P3.1": check_decomposition_alpha,
    "C3.2": check_alpha_bound,
    "T3.6": check_reduced_alpha,
    "C3.7": check_min_primes_log,
    "L4.2": check_reduction_genus,
    "T4.4": check_genus_below_two,
    "C4.5": check_planar,
    "E4.6": check_biclique_examples,
}


def _apply_errata(analysis: RingAnalysis, verdict: TheoremVerdict) -> TheoremVerdict:
    if verdict.status is not VerdictStatus.FAIL:
        return verdict
    for erratum in KNOWN_ERRATA:
        if erratum.theorem_id == verdict.theorem_id and erratum.applies(analysis):
            verdict.erratum = erratum.explanation
            break
    return verdict


def verify_ring(
    analysis: RingAnalysis, theorem_ids: Iterable[str] | None = None
) -> list[TheoremVerdict]:
    """Evaluate the selected theorem checks (all by default) on one ring.

    Raises:
        InvalidParameterError: For an unknown theorem id
    """
    selected = list(theorem_ids) if theorem_ids is not None else list(THEOREM_IDS)
    unknown = [tid for tid in selected if tid not in CHECKS]
    if unknown:
        raise InvalidParameterError("theorem", unknown[0], f"one of {', '.join(THEOREM_IDS)}")
    ordered = [tid for tid in THEOREM_IDS if tid in selected]

    if analysis.lattice.is_field:
        reason = "R is a field; the nil-graph is empty"
        return [_na(tid, reason) for tid in ordered]

    verdicts = [_apply_errata(analysis, CHECKS[tid](analysis)) for tid in ordered]
    for verdict in verdicts:
        if verdict.unexpected:
            logger.warning(
                "Theorem check failed",
                ring=analysis.label,
                theorem=verdict.theorem_id,
                counterexample=verdict.counterexample,
            )
    return verdicts


def summarize(results: Iterable[tuple[str, Sequence[TheoremVerdict]]]) -> CensusSummary:
    """Fold per-ring verdicts into a census summary."""
    summary = CensusSummary()
    for label, verdicts in results:
        summary.ring_count += 1
        for verdict in verdicts:
            summary.record(label, verdict)
    return summary


def verify_theorems(
    specs: Iterable[RingSpec | str],
    config: NilGraphConfig | None = None,
    *,
    theorem_ids: Iterable[str] | None = None,
) -> tuple[dict[str, list[TheoremVerdict]], CensusSummary]:
    """Analyze each ring in turn and evaluate the theorem checks.

    Returns:
        Verdicts keyed by canonical ring label (sorted), and the summary
    """
    from nilgraph.census.analyze import analyze_ring

    selected = list(theorem_ids) if theorem_ids is not None else None
    verdicts: dict[str, list[TheoremVerdict]] = {}
    for spec in specs:
        analysis = analyze_ring(spec, config, verify=False)
        verdicts[analysis.label] = verify_ring(analysis, selected)
    ordered = dict(sorted(verdicts.items()))
    return ordered, summarize(ordered.items())
