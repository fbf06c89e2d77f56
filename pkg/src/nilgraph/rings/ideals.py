"""Ideal lattice of a finite commutative ring.

Every ideal of a finite unital ring is a finite sum of principal ideals, so
the lattice is the closure of the principal ideals under pairwise sums.
Ideals keep their full element set plus a small additive generating set
used for sums and products.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import structlog

from nilgraph.core.exceptions import InvalidParameterError, ResourceLimitExceeded
from nilgraph.rings.ring import FiniteRing, RingElement, Vector

logger = structlog.get_logger()

DEFAULT_MAX_RING_ORDER = 4096
DEFAULT_IDEAL_CHECK_ORDER = 1024


# -- additive groups ---------------------------------------------------------


def _cyclic_multiples(ring: FiniteRing, g: Vector) -> list[Vector]:
    multiples = [ring.zero_vec]
    current = g
    while current != ring.zero_vec:
        multiples.append(current)
        current = ring.add_vec(current, g)
    return multiples


def additive_span(
    ring: FiniteRing, generators: Iterable[Vector]
) -> tuple[frozenset[Vector], tuple[Vector, ...]]:
    """Subgroup generated by ``generators`` and the generators actually needed.

    The subgroup is built as a sum of cyclic subgroups; a generator already
    inside the running span is skipped.
    """
    span: set[Vector] = {ring.zero_vec}
    used: list[Vector] = []
    for g in generators:
        if g in span:
            continue
        used.append(g)
        multiples = _cyclic_multiples(ring, g)
        span = {ring.add_vec(a, m) for a in span for m in multiples}
    return frozenset(span), tuple(used)


# -- ideals ------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """An ideal stored as its full element set.

    Two ideals are equal iff their element sets are equal.

    Attributes:
        ring: The ambient ring
        elements: Every member as a coefficient vector
        additive_generators: Vectors whose additive span is the ideal
        generator_hint: Vectors generating the ideal as an ideal
    """

    ring: FiniteRing = field(compare=False, repr=False)
    elements: frozenset[Vector]
    additive_generators: tuple[Vector, ...] = field(default=(), compare=False, repr=False)
    generator_hint: tuple[Vector, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, RingElement):
            return item.coeffs in self.elements
        return item in self.elements

    def issubset(self, other: Ideal) -> bool:
        return self.elements <= other.elements

    @property
    def is_zero(self) -> bool:
        return len(self.elements) == 1

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == self.ring.order

    @cached_property
    def sorted_elements(self) -> tuple[Vector, ...]:
        return tuple(sorted(self.elements))

    @property
    def sort_key(self) -> tuple[int, tuple[Vector, ...]]:
        """Ideals order by size, then by their sorted element lists."""
        return (len(self.elements), self.sorted_elements)

    def label(self) -> str:
        """Generator string such as ``(2)`` or ``(2, x)``."""
        gens = self.generator_hint or self.additive_generators or (self.ring.zero_vec,)
        return "(" + ", ".join(self.ring.format_vec(g) for g in gens) + ")"

    def __str__(self) -> str:
        return self.label()


def _ideal_from_additive(
    ring: FiniteRing, generators: Iterable[Vector], hint: Sequence[Vector] = ()
) -> Ideal:
    elements, used = additive_span(ring, generators)
    return Ideal(ring, elements, used, tuple(hint))


def principal_ideal(ring: FiniteRing, x: RingElement | Vector) -> Ideal:
    """(x) = {r * x : r in R}, the additive span of e_i * x."""
    vec = x.coeffs if isinstance(x, RingElement) else x
    gens = [ring.mul_vec(e, vec) for e in ring.basis()]
    return _ideal_from_additive(ring, gens, hint=(vec,))


def ideal_sum(ideal: Ideal, other: Ideal) -> Ideal:
    """I + J, the additive closure of the union."""
    return _ideal_from_additive(ideal.ring, (*ideal.additive_generators, *other.additive_generators))


def ideal_product(ideal: Ideal, other: Ideal) -> Ideal:
    """I * J, the additive closure of {a * b : a in I, b in J}."""
    ring = ideal.ring
    gens = [ring.mul_vec(a, b) for a in ideal.additive_generators for b in other.additive_generators]
    return _ideal_from_additive(ring, sorted(gens))


def product_within(ideal: Ideal, other: Ideal, target: frozenset[Vector]) -> bool:
    """Whether I * J lies inside the additive group ``target``.

    Only generator products need checking since ``target`` is closed under addition.
    """
    ring = ideal.ring
    return all(
        ring.mul_vec(a, b) in target for a in ideal.additive_generators for b in other.additive_generators
    )


def annihilator(ring: FiniteRing, ideal: Ideal) -> Ideal:
    """Ann(I) = {r : r * I = 0}."""
    zero = ring.zero_vec
    members = [
        r
        for r in ring.vectors()
        if all(ring.mul_vec(r, g) == zero for g in ideal.additive_generators)
    ]
    return _ideal_from_additive(ring, members)


def verify_ideal(ring: FiniteRing, ideal: Ideal, exhaustive_order: int = DEFAULT_IDEAL_CHECK_ORDER) -> bool:
    """Check the ideal axioms, elementwise when |R| <= ``exhaustive_order``."""
    if ring.zero_vec not in ideal.elements:
        return False
    members: Iterable[Vector] = (
        ideal.elements if ring.order <= exhaustive_order else ideal.additive_generators
    )
    basis = ring.basis()
    for a in members:
        if ring.neg_vec(a) not in ideal.elements:
            return False
        for g in ideal.additive_generators:
            if ring.add_vec(a, g) not in ideal.elements:
                return False
        for e in basis:
            if ring.mul_vec(e, a) not in ideal.elements:
                return False
    return True


def _with_generators(ring: FiniteRing, ideal: Ideal, principal: dict[frozenset[Vector], Ideal]) -> Ideal:
    """Attach a small ideal-generating set, largest principal pieces first."""
    if ideal.elements in principal:
        return Ideal(ring, ideal.elements, ideal.additive_generators, principal[ideal.elements].generator_hint)
    candidates = sorted(
        (p for p in principal.values() if p.elements < ideal.elements and not p.is_zero),
        key=lambda p: (-len(p), p.generator_hint),
    )
    hint: list[Vector] = []
    current: Ideal | None = None
    for p in candidates:
        if current is not None and p.elements <= current.elements:
            continue
        hint.append(p.generator_hint[0])
        current = p if current is None else ideal_sum(current, p)
        if current.elements == ideal.elements:
            break
    return Ideal(ring, ideal.elements, ideal.additive_generators, tuple(hint))


def enumerate_ideals(ring: FiniteRing, max_order: int = DEFAULT_MAX_RING_ORDER) -> list[Ideal]:
    """All ideals of ``ring``, including (0) and R, sorted by size then elements.

    Raises:
        ResourceLimitExceeded: If |R| exceeds ``max_order``
    """
    if ring.order > max_order:
        raise ResourceLimitExceeded("ring order", max_order, actual=ring.order)

    principal: dict[frozenset[Vector], Ideal] = {}
    for x in ring.vectors():
        p = principal_ideal(ring, x)
        principal.setdefault(p.elements, p)

    found: dict[frozenset[Vector], Ideal] = dict(principal)
    pending = list(found.values())
    known = list(found.values())
    while pending:
        new = pending.pop()
        for other in list(known):
            if new.elements <= other.elements or other.elements <= new.elements:
                continue
            s = ideal_sum(new, other)
            if s.elements not in found:
                found[s.elements] = s
                known.append(s)
                pending.append(s)

    ideals = [_with_generators(ring, ideal, principal) for ideal in found.values()]
    ideals.sort(key=lambda ideal: ideal.sort_key)
    logger.debug("Ideals enumerated", ring=ring.label, count=len(ideals), principal=len(principal))
    return ideals


def brute_force_ideals(ring: FiniteRing) -> list[Ideal]:
    """Every additive subgroup that is closed under multiplication by R.

    Exponential in the group structure; a test oracle for small rings only.
    """
    zero = frozenset({ring.zero_vec})
    seen: dict[frozenset[Vector], tuple[Vector, ...]] = {zero: ()}
    frontier = [zero]
    all_vectors = list(ring.vectors())
    while frontier:
        subgroup = frontier.pop()
        gens = seen[subgroup]
        for x in all_vectors:
            if x in subgroup:
                continue
            bigger, used = additive_span(ring, (*gens, x))
            if bigger not in seen:
                seen[bigger] = used
                frontier.append(bigger)
    basis = ring.basis()
    ideals = []
    for subgroup, gens in seen.items():
        if all(ring.mul_vec(e, g) in subgroup for e in basis for g in gens):
            ideals.append(Ideal(ring, subgroup, gens))
    ideals.sort(key=lambda ideal: ideal.sort_key)
    return ideals


# -- radical, primes, idempotents -------------------------------------------


def is_nilpotent(ring: FiniteRing, x: Vector) -> bool:
    """Iterate powers until 0 or a repeated value."""
    zero = ring.zero_vec
    seen: set[Vector] = set()
    y = x
    while y != zero:
        if y in seen:
            return False
        seen.add(y)
        y = ring.mul_vec(y, x)
    return True


def nilradical(ring: FiniteRing) -> Ideal:
    """Nil(R), the set of nilpotent elements."""
    members = [x for x in ring.vectors() if is_nilpotent(ring, x)]
    return _ideal_from_additive(ring, members)


def _coset_representatives(ring: FiniteRing, candidate: Ideal) -> list[Vector]:
    reps: list[Vector] = []
    covered: set[Vector] = set()
    for x in ring.vectors():
        if x in covered:
            continue
        reps.append(x)
        covered.update(ring.add_vec(x, p) for p in candidate.elements)
    return reps


def is_prime_ideal(ring: FiniteRing, candidate: Ideal) -> bool:
    """P != R, and a, b outside P forces ab outside P.

    Membership in P depends only on the coset a + P, so one representative
    per coset outside P is enough.
    """
    if candidate.is_unit:
        return False
    outside = [a for a in _coset_representatives(ring, candidate) if a not in candidate.elements]
    for i, a in enumerate(outside):
        for b in outside[i:]:
            if ring.mul_vec(a, b) in candidate.elements:
                return False
    return True


def classify_primes(
    ring: FiniteRing, lattice: Sequence[Ideal]
) -> tuple[list[Ideal], list[Ideal], list[Ideal]]:
    """Return (primes, maximal, minimal_primes), each in lattice order."""
    proper = [ideal for ideal in lattice if not ideal.is_unit]
    primes = [candidate for candidate in proper if is_prime_ideal(ring, candidate)]
    maximal = [
        m_ideal
        for m_ideal in proper
        if not any(m_ideal.elements < other.elements for other in proper)
    ]
    minimal_primes = [
        candidate
        for candidate in primes
        if not any(smaller.elements < candidate.elements for smaller in primes)
    ]
    return primes, maximal, minimal_primes


def _first_nonzero(vec: Vector) -> int:
    return next((i for i, c in enumerate(vec) if c), len(vec))


def primitive_idempotents(ring: FiniteRing) -> list[RingElement]:
    """Minimal non-zero idempotents under e <= f iff ef = e.

    Ordered by the position of the first non-zero coefficient, so product
    rings list factor idempotents in factor order.
    """
    zero = ring.zero_vec
    idempotents = [e for e in ring.vectors() if e != zero and ring.mul_vec(e, e) == e]
    primitive = [
        e
        for e in idempotents
        if not any(f != e and ring.mul_vec(f, e) == f for f in idempotents)
    ]
    primitive.sort(key=lambda e: (_first_nonzero(e), e))
    return [RingElement(ring, e) for e in primitive]


# -- lattice report ----------------------------------------------------------


@dataclass(frozen=True)
class LocalFactor:
    """The local ring R*e for a primitive idempotent e."""

    idempotent: Vector
    order: int
    ideal_count: int

    @property
    def nontrivial_ideals(self) -> int:
        return self.ideal_count - 2

    @property
    def is_field(self) -> bool:
        return self.ideal_count == 2

    def to_dict(self) -> dict[str, int | bool]:
        return {
            "order": self.order,
            "ideal_count": self.ideal_count,
            "nontrivial_ideals": self.nontrivial_ideals,
            "is_field": self.is_field,
        }


def local_factors(ring: FiniteRing, lattice: Sequence[Ideal], idempotents: Sequence[RingElement]) -> list[LocalFactor]:
    """Local factors R*e; their ideals are the ideals of R inside (e)."""
    factors = []
    for e in idempotents:
        piece = principal_ideal(ring, e)
        count = sum(1 for ideal in lattice if ideal.elements <= piece.elements)
        factors.append(LocalFactor(e.coeffs, piece.order, count))
    return factors


@dataclass(frozen=True)
class LatticeReport:
    """Everything the graph constructions need to know about the ideals of R."""

    ring: FiniteRing
    all_ideals: tuple[Ideal, ...]
    nilradical: Ideal
    primes: tuple[Ideal, ...]
    maximal: tuple[Ideal, ...]
    minimal_primes: tuple[Ideal, ...]
    primitive_idempotents: tuple[RingElement, ...]
    local_factors: tuple[LocalFactor, ...]

    @property
    def is_reduced(self) -> bool:
        return self.nilradical.is_zero

    @property
    def is_local(self) -> bool:
        return len(self.maximal) == 1

    @property
    def is_field(self) -> bool:
        return len(self.all_ideals) == 2

    @property
    def nontrivial_ideals(self) -> tuple[Ideal, ...]:
        return tuple(ideal for ideal in self.all_ideals if not ideal.is_zero and not ideal.is_unit)

    def find(self, elements: frozenset[Vector]) -> Ideal | None:
        """The lattice member with the given element set."""
        return next((ideal for ideal in self.all_ideals if ideal.elements == elements), None)

    def nilradical_is_prime_intersection(self) -> bool:
        inter = frozenset.intersection(*(candidate.elements for candidate in self.minimal_primes))
        return inter == self.nilradical.elements


def analyze_lattice(
    ring: FiniteRing,
    max_order: int = DEFAULT_MAX_RING_ORDER,
    *,
    ideal_check_order: int = DEFAULT_IDEAL_CHECK_ORDER,
) -> LatticeReport:
    """Enumerate ideals and derive the radical, primes and decomposition.

    Every enumerated ideal is re-checked with ``verify_ideal``, elementwise
    when |R| <= ``ideal_check_order``.
    """
    ideals = enumerate_ideals(ring, max_order)
    for ideal in ideals:
        if not verify_ideal(ring, ideal, ideal_check_order):
            raise InvalidParameterError(
                "ring", ring.label, f"a ring in which {ideal.label()} is closed under R"
            )
    nil = nilradical(ring)
    nil = next(ideal for ideal in ideals if ideal.elements == nil.elements)
    primes, maximal, minimal = classify_primes(ring, ideals)
    idempotents = primitive_idempotents(ring)

    total = ring.zero_vec
    for e in idempotents:
        total = ring.add_vec(total, e.coeffs)
    if total != ring.one_coeffs or len(idempotents) != len(maximal):
        raise InvalidParameterError(
            "ring", ring.label, "a commutative ring whose idempotents split it into local factors"
        )

    report = LatticeReport(
        ring=ring,
        all_ideals=tuple(ideals),
        nilradical=nil,
        primes=tuple(primes),
        maximal=tuple(maximal),
        minimal_primes=tuple(minimal),
        primitive_idempotents=tuple(idempotents),
        local_factors=tuple(local_factors(ring, ideals, idempotents)),
    )
    logger.info(
        "Lattice analyzed",
        ring=ring.label,
        ideals=len(ideals),
        maximal=len(maximal),
        minimal_primes=len(minimal),
        reduced=report.is_reduced,
    )
    return report

