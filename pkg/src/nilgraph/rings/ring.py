"""Finite commutative rings with identity, presented by structure constants.

A ring is an additive group Z_{d_1} x ... x Z_{d_k} with generators
e_1, ..., e_k, and a bilinear multiplication fixed by the coefficient
vectors of the products e_i * e_j. Elements are coefficient vectors.

Example:
    ```python
    from nilgraph.rings.ring import make_zmod, make_poly_quotient, direct_product

    z6 = make_zmod(6)
    two, three = z6.element((2,)), z6.element((3,))
    assert (two * three).is_zero

    r = make_poly_quotient(make_zmod(4), [0, 0, 0, 1])  # Z4[x]/(x^3)
    ```
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field, replace
from functools import cached_property
from math import prod

import structlog

from nilgraph.core.exceptions import InvalidParameterError

logger = structlog.get_logger()

Vector = tuple[int, ...]

# Rings up to this order get an exhaustive identity check at construction.
DEFAULT_AXIOM_CHECK_ORDER = 4096


@dataclass(frozen=True)
class FiniteRing:
    """A finite commutative ring with identity.

    Attributes:
        additive_orders: Orders (d_1, ..., d_k) of the cyclic additive factors
        structure_constants: ``structure_constants[i][j]`` is the vector of e_i * e_j
        one_coeffs: Coefficient vector of the identity
        label: Canonical construction string, e.g. ``Z6[x]/(x^2)``
        factors: Factor rings when built by ``direct_product``
        factor_offsets: First generator index of each factor
        modulus: m when the ring is Z_m (the only base a polynomial quotient accepts)
        variable: Indeterminate name for polynomial quotients
    """

    additive_orders: tuple[int, ...]
    structure_constants: tuple[tuple[Vector, ...], ...]
    one_coeffs: Vector
    label: str
    factors: tuple[FiniteRing, ...] = field(default=(), repr=False)
    factor_offsets: tuple[int, ...] = field(default=(), repr=False)
    modulus: int | None = None
    variable: str | None = None

    def __post_init__(self) -> None:
        k = len(self.additive_orders)
        if k == 0 or any(d < 1 for d in self.additive_orders):
            raise InvalidParameterError(
                "additive_orders", self.additive_orders, "a non-empty list of positive integers"
            )
        if len(self.structure_constants) != k or any(
            len(row) != k for row in self.structure_constants
        ):
            raise InvalidParameterError(
                "structure_constants", f"{k} generators", "a k x k table of coefficient vectors"
            )
        for i, row in enumerate(self.structure_constants):
            for j, vec in enumerate(row):
                if not self._is_reduced(vec):
                    raise InvalidParameterError(
                        f"structure_constants[{i}][{j}]", vec, "coefficients reduced modulo d_l"
                    )
        if not self._is_reduced(self.one_coeffs):
            raise InvalidParameterError("one", self.one_coeffs, "a reduced coefficient vector")

    def __hash__(self) -> int:
        return hash((self.label, self.additive_orders))

    def _is_reduced(self, vec: Sequence[int]) -> bool:
        return len(vec) == len(self.additive_orders) and all(
            0 <= c < d for c, d in zip(vec, self.additive_orders)
        )

    # -- shape -------------------------------------------------------------

    @property
    def rank(self) -> int:
        """Number of additive generators k."""
        return len(self.additive_orders)

    @property
    def order(self) -> int:
        """|R|."""
        return prod(self.additive_orders)

    @property
    def zero_vec(self) -> Vector:
        return (0,) * self.rank

    @property
    def zero(self) -> RingElement:
        return RingElement(self, self.zero_vec)

    @property
    def one(self) -> RingElement:
        return RingElement(self, self.one_coeffs)

    def basis(self) -> list[Vector]:
        """Coefficient vectors of the additive generators e_1, ..., e_k."""
        k = self.rank
        return [tuple(1 if i == j else 0 for j in range(k)) for i in range(k)]

    def vectors(self) -> Iterator[Vector]:
        """Every element as a coefficient vector, in lexicographic order."""
        return itertools.product(*(range(d) for d in self.additive_orders))

    def elements(self) -> Iterator[RingElement]:
        """Every element, in lexicographic coefficient order."""
        for vec in self.vectors():
            yield RingElement(self, vec)

    def element(self, coeffs: Sequence[int]) -> RingElement:
        """Build an element, reducing each coefficient modulo its additive order."""
        if len(coeffs) != self.rank:
            raise InvalidParameterError("coeffs", tuple(coeffs), f"{self.rank} coefficients")
        return RingElement(self, self.reduce(coeffs))

    def reduce(self, coeffs: Sequence[int]) -> Vector:
        return tuple(c % d for c, d in zip(coeffs, self.additive_orders))

    # -- vector arithmetic -------------------------------------------------

    @cached_property
    def _sparse_products(self) -> tuple[tuple[tuple[tuple[int, int], ...], ...], ...]:
        return tuple(
            tuple(tuple((slot, s) for slot, s in enumerate(vec) if s) for vec in row)
            for row in self.structure_constants
        )

    def add_vec(self, a: Vector, b: Vector) -> Vector:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.additive_orders))

    def neg_vec(self, a: Vector) -> Vector:
        return tuple(-x % d for x, d in zip(a, self.additive_orders))

    def scale_vec(self, c: int, a: Vector) -> Vector:
        return tuple(c * x % d for x, d in zip(a, self.additive_orders))

    def mul_vec(self, a: Vector, b: Vector) -> Vector:
        """Bilinear product through the structure constants."""
        acc = [0] * self.rank
        sparse = self._sparse_products
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = sparse[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                c = ai * bj
                for slot, s in row[j]:
                    acc[slot] += c * s
        return tuple(v % d for v, d in zip(acc, self.additive_orders))

    def pow_vec(self, a: Vector, exponent: int) -> Vector:
        """Repeated squaring; ``a ** 0`` is the identity."""
        if exponent < 0:
            raise InvalidParameterError("exponent", exponent, "a non-negative integer")
        result = self.one_coeffs
        base = a
        while exponent:
            if exponent & 1:
                result = self.mul_vec(result, base)
            exponent >>= 1
            if exponent:
                base = self.mul_vec(base, base)
        return result

    # -- presentation ------------------------------------------------------

    def format_vec(self, vec: Vector) -> str:
        """Human-readable element: integers, polynomials in x, or tuples for products."""
        if self.factors:
            parts = []
            for factor, offset in zip(self.factors, self.factor_offsets):
                parts.append(factor.format_vec(vec[offset : offset + factor.rank]))
            return "(" + ", ".join(parts) + ")"
        if self.variable:
            return format_polynomial(vec, self.variable)
        if self.rank == 1:
            return str(vec[0])
        return "(" + ", ".join(str(c) for c in vec) + ")"

    def project(self, x: RingElement, index: int) -> RingElement:
        """Component of a product element in factor ``index``."""
        if not self.factors:
            raise InvalidParameterError("ring", self.label, "a direct product")
        factor = self.factors[index]
        offset = self.factor_offsets[index]
        return RingElement(factor, x.coeffs[offset : offset + factor.rank])

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class RingElement:
    """An element of a FiniteRing, stored as its coefficient vector."""

    ring: FiniteRing = field(repr=False)
    coeffs: Vector

    def __post_init__(self) -> None:
        if not self.ring._is_reduced(self.coeffs):
            raise InvalidParameterError(
                "coeffs", self.coeffs, f"{self.ring.rank} residues reduced modulo {self.ring.additive_orders}"
            )

    def _check(self, other: object) -> RingElement:
        if not isinstance(other, RingElement) or not (
            other.ring is self.ring or other.ring == self.ring
        ):
            raise InvalidParameterError("operand", other, f"an element of {self.ring.label}")
        return other

    def __add__(self, other: object) -> RingElement:
        o = self._check(other)
        return RingElement(self.ring, self.ring.add_vec(self.coeffs, o.coeffs))

    def __sub__(self, other: object) -> RingElement:
        o = self._check(other)
        return RingElement(self.ring, self.ring.add_vec(self.coeffs, self.ring.neg_vec(o.coeffs)))

    def __mul__(self, other: object) -> RingElement:
        o = self._check(other)
        return RingElement(self.ring, self.ring.mul_vec(self.coeffs, o.coeffs))

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, self.ring.neg_vec(self.coeffs))

    def __pow__(self, exponent: int) -> RingElement:
        return RingElement(self.ring, self.ring.pow_vec(self.coeffs, exponent))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return self.ring.format_vec(self.coeffs)


def add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def neg(x: RingElement) -> RingElement:
    return -x


def power(x: RingElement, exponent: int) -> RingElement:
    return x**exponent


# -- axioms ------------------------------------------------------------------


def check_axioms(ring: FiniteRing, exhaustive_order: int = DEFAULT_AXIOM_CHECK_ORDER) -> None:
    """Verify the ring axioms that structure constants do not guarantee.

    Checks well-definedness (d_i * (e_i e_j) = 0), commutativity and
    associativity on generators, and the identity on every element when
    ``ring.order <= exhaustive_order`` (on generators otherwise).

    Raises:
        InvalidParameterError: naming the first violated axiom
    """
    basis = ring.basis()
    sc = ring.structure_constants
    for i, j in itertools.product(range(ring.rank), repeat=2):
        if ring.scale_vec(ring.additive_orders[i], sc[i][j]) != ring.zero_vec:
            raise InvalidParameterError(
                "structure_constants", (i, j), "products annihilated by the generator order"
            )
        if sc[i][j] != sc[j][i]:
            raise InvalidParameterError("structure_constants", (i, j), "a commutative product")
    for a, b, c in itertools.product(basis, repeat=3):
        if ring.mul_vec(ring.mul_vec(a, b), c) != ring.mul_vec(a, ring.mul_vec(b, c)):
            raise InvalidParameterError("structure_constants", (a, b, c), "an associative product")
    candidates = ring.vectors() if ring.order <= exhaustive_order else iter(basis)
    for x in candidates:
        if ring.mul_vec(ring.one_coeffs, x) != x:
            raise InvalidParameterError("one", ring.one_coeffs, f"an identity (fails on {x})")


# -- number theory helpers ---------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p^k for a prime p, or None."""
    if q < 2:
        return None
    p = next(f for f in itertools.count(2) if q % f == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


# -- polynomials over Z_m ----------------------------------------------------


def format_polynomial(coeffs: Sequence[int], variable: str = "x") -> str:
    """Render ascending coefficients with the highest degree first, e.g. ``x^2+2x+1``."""
    terms = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if not c:
            continue
        if degree == 0:
            terms.append(str(c))
            continue
        mono = variable if degree == 1 else f"{variable}^{degree}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def _poly_remainder(a: list[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial b over Z_p (ascending coefficients)."""
    rem = [c % p for c in a]
    db = len(b) - 1
    for shift in range(len(rem) - 1 - db, -1, -1):
        lead = rem[shift + db]
        if lead:
            for i, c in enumerate(b):
                rem[shift + i] = (rem[shift + i] - lead * c) % p
    return rem[:db]


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    degree = len(f) - 1
    if degree == 1:
        return True
    if f[0] % p == 0:
        return False
    for d in range(1, degree // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = (*low, 1)
            if not any(_poly_remainder(list(f), g, p)):
                return False
    return True


def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible polynomial of degree k over Z_p."""
    for low in itertools.product(range(p), repeat=k):
        f = (*low, 1)
        if _is_irreducible(f, p):
            return f
    raise InvalidParameterError("degree", k, "a degree with an irreducible polynomial")


# -- constructors ------------------------------------------------------------


def make_zmod(n: int, *, check_order: int = DEFAULT_AXIOM_CHECK_ORDER) -> FiniteRing:
    """The ring Z_n with one generator e_1 = 1."""
    if not isinstance(n, int) or n < 2:
        raise InvalidParameterError("n", n, "an integer >= 2")
    ring = FiniteRing(
        additive_orders=(n,),
        structure_constants=(((1 % n,),),),
        one_coeffs=(1,),
        label=f"Z{n}",
        modulus=n,
    )
    check_axioms(ring, check_order)
    return ring


def make_poly_quotient(
    base: FiniteRing,
    f: Sequence[int],
    *,
    variable: str = "x",
    check_order: int = DEFAULT_AXIOM_CHECK_ORDER,
) -> FiniteRing:
    """Z_m[x]/(f) for a monic f given by ascending coefficients.

    Generators are 1, x, ..., x^{t-1}; products reduce modulo f, then modulo m.
    """
    m = base.modulus
    if m is None:
        raise InvalidParameterError("base", base.label, "a Z_m ring")
    coeffs = [c % m for c in f]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    t = len(coeffs) - 1
    if t < 1:
        raise InvalidParameterError("f", tuple(f), "a polynomial of degree >= 1")
    if coeffs[-1] != 1 % m:
        raise InvalidParameterError("f", tuple(f), f"a monic polynomial over Z{m}")

    # x^s for s < 2t - 1, reduced
    tail = [-c % m for c in coeffs[:t]]  # x^t
    powers: list[Vector] = [tuple(1 if i == s else 0 for i in range(t)) for s in range(t)]
    for _ in range(t, 2 * t - 1):
        prev = powers[-1]
        top = prev[-1]
        shifted = [0, *prev[:-1]]
        powers.append(tuple((shifted[i] + top * tail[i]) % m for i in range(t)))

    structure = tuple(tuple(powers[i + j] for j in range(t)) for i in range(t))
    ring = FiniteRing(
        additive_orders=(m,) * t,
        structure_constants=structure,
        one_coeffs=powers[0],
        label=f"Z{m}[{variable}]/({format_polynomial(coeffs, variable)})",
        variable=variable,
    )
    check_axioms(ring, check_order)
    logger.debug("Polynomial quotient built", label=ring.label, order=ring.order)
    return ring


def make_gf(p: int, k: int = 1, *, check_order: int = DEFAULT_AXIOM_CHECK_ORDER) -> FiniteRing:
    """GF(p^k) as Z_p[x]/(f) for the lexicographically first irreducible monic f."""
    if not is_prime(p):
        raise InvalidParameterError("p", p, "a prime")
    if k < 1:
        raise InvalidParameterError("k", k, "an integer >= 1")
    if k == 1:
        return replace(make_zmod(p, check_order=check_order), label=f"GF({p})")
    f = first_irreducible(p, k)
    ring = make_poly_quotient(make_zmod(p), f, check_order=check_order)
    return replace(ring, label=f"GF({p}^{k})")


def _factor_label(ring: FiniteRing) -> str:
    return f"({ring.label})" if "*" in ring.label else ring.label


def direct_product(
    factors: Sequence[FiniteRing], *, check_order: int = DEFAULT_AXIOM_CHECK_ORDER
) -> FiniteRing:
    """Componentwise product; a single factor is returned unchanged."""
    if not factors:
        raise InvalidParameterError("factors", [], "a non-empty list of rings")
    if len(factors) == 1:
        return factors[0]

    orders: list[int] = []
    offsets: list[int] = []
    for ring in factors:
        offsets.append(len(orders))
        orders.extend(ring.additive_orders)
    k = len(orders)
    zero: Vector = (0,) * k

    rows: list[list[Vector]] = [[zero] * k for _ in range(k)]
    for ring, offset in zip(factors, offsets):
        for i, j in itertools.product(range(ring.rank), repeat=2):
            vec = [0] * k
            vec[offset : offset + ring.rank] = ring.structure_constants[i][j]
            rows[offset + i][offset + j] = tuple(vec)

    product = FiniteRing(
        additive_orders=tuple(orders),
        structure_constants=tuple(tuple(row) for row in rows),
        one_coeffs=tuple(c for ring in factors for c in ring.one_coeffs),
        label="*".join(_factor_label(ring) for ring in factors),
        factors=tuple(factors),
        factor_offsets=tuple(offsets),
    )
    check_axioms(product, check_order)
    return product
