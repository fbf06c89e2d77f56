"""Finite commutative rings and their ideal lattices."""

from nilgraph.rings.ideals import (
    Ideal,
    LatticeReport,
    LocalFactor,
    analyze_lattice,
    annihilator,
    classify_primes,
    enumerate_ideals,
    ideal_product,
    ideal_sum,
    nilradical,
    primitive_idempotents,
    principal_ideal,
)
from nilgraph.rings.ring import (
    FiniteRing,
    RingElement,
    direct_product,
    make_gf,
    make_poly_quotient,
    make_zmod,
)

__all__ = [
    "FiniteRing",
    "RingElement",
    "direct_product",
    "make_gf",
    "make_poly_quotient",
    "make_zmod",
    "Ideal",
    "LatticeReport",
    "LocalFactor",
    "analyze_lattice",
    "annihilator",
    "classify_primes",
    "enumerate_ideals",
    "ideal_product",
    "ideal_sum",
    "nilradical",
    "primitive_idempotents",
    "principal_ideal",
]
