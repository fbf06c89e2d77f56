"""Ring specification strings.

Grammar (whitespace is insignificant)::

    product := factor ("*" factor)*
    factor  := "(" product ")" | zmod | gf
    zmod    := "Z" INT [ "[x]/(" poly ")" ]
    gf      := "GF(" INT [ "^" INT ] ")"
    poly    := ["-"] term (("+" | "-") term)*
    term    := INT ["*"] "x" ["^" INT] | "x" ["^" INT] | INT

Nested products flatten, so ``(Z2*Z3)*Z5`` and ``Z2*Z3*Z5`` have the same
canonical label.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from nilgraph.core.exceptions import InvalidParameterError, RingSpecSyntaxError
from nilgraph.rings.ring import (
    DEFAULT_AXIOM_CHECK_ORDER,
    FiniteRing,
    direct_product,
    format_polynomial,
    is_prime,
    make_gf,
    make_poly_quotient,
    make_zmod,
    prime_power,
)


@dataclass(frozen=True)
class ZmodSpec:
    n: int

    def label(self) -> str:
        return f"Z{self.n}"

    def order(self) -> int:
        return self.n

    def build(self, check_order: int) -> FiniteRing:
        return make_zmod(self.n, check_order=check_order)


@dataclass(frozen=True)
class GFSpec:
    p: int
    k: int

    def label(self) -> str:
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    def order(self) -> int:
        return self.p**self.k

    def build(self, check_order: int) -> FiniteRing:
        return make_gf(self.p, self.k, check_order=check_order)


@dataclass(frozen=True)
class PolyQuotientSpec:
    m: int
    coeffs: tuple[int, ...]  # ascending, reduced mod m, monic

    def label(self) -> str:
        return f"Z{self.m}[x]/({format_polynomial(self.coeffs)})"

    def order(self) -> int:
        return self.m ** (len(self.coeffs) - 1)

    def build(self, check_order: int) -> FiniteRing:
        return make_poly_quotient(make_zmod(self.m), self.coeffs, check_order=check_order)


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple[FactorSpec, ...]

    def label(self) -> str:
        return "*".join(f.label() for f in self.factors)

    def order(self) -> int:
        return prod(f.order() for f in self.factors)

    def build(self, check_order: int) -> FiniteRing:
        return direct_product([f.build(check_order) for f in self.factors], check_order=check_order)


FactorSpec = ZmodSpec | GFSpec | PolyQuotientSpec
SpecNode = FactorSpec | ProductSpec


@dataclass(frozen=True)
class RingSpec:
    """A parsed ring specification."""

    text: str
    ast: SpecNode

    @property
    def label(self) -> str:
        """Canonical label; parsing it again gives the same spec."""
        return self.ast.label()

    @property
    def order(self) -> int:
        """Number of elements, without building the tables."""
        return self.ast.order()

    def build(self, check_order: int = DEFAULT_AXIOM_CHECK_ORDER) -> FiniteRing:
        return self.ast.build(check_order)

    def __str__(self) -> str:
        return self.label


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # -- lexing helpers --

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _error(self, reason: str) -> RingSpecSyntaxError:
        return RingSpecSyntaxError(self.text, self.pos, reason)

    def _expect(self, token: str) -> None:
        self._skip()
        if not self.text.startswith(token, self.pos):
            raise self._error(f"expected {token!r}")
        self.pos += len(token)

    def _accept(self, token: str) -> bool:
        self._skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def _int(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self._error("expected an integer")
        return int(self.text[start : self.pos])

    # -- grammar --

    def parse(self) -> SpecNode:
        node = self._product()
        if self._peek():
            raise self._error("unexpected trailing input")
        return node

    def _product(self) -> SpecNode:
        factors: list[FactorSpec] = []
        while True:
            node = self._factor()
            factors.extend(node.factors if isinstance(node, ProductSpec) else (node,))
            if not self._accept("*"):
                break
        return factors[0] if len(factors) == 1 else ProductSpec(tuple(factors))

    def _factor(self) -> SpecNode:
        if self._accept("("):
            node = self._product()
            self._expect(")")
            return node
        if self._accept("GF"):
            return self._gf()
        if self._accept("Z"):
            return self._zmod()
        raise self._error("expected 'Z', 'GF' or '('")

    def _gf(self) -> GFSpec:
        self._expect("(")
        base = self._int()
        if self._accept("^"):
            k = self._int()
            if not is_prime(base):
                raise InvalidParameterError("GF base", base, "a prime")
            if k < 1:
                raise InvalidParameterError("GF exponent", k, "an integer >= 1")
            p = base
        else:
            split = prime_power(base)
            if split is None:
                raise InvalidParameterError("GF order", base, "a prime power")
            p, k = split
        self._expect(")")
        return GFSpec(p, k)

    def _zmod(self) -> ZmodSpec | PolyQuotientSpec:
        n = self._int()
        if n < 2:
            raise InvalidParameterError("n", n, "an integer >= 2")
        if not self._accept("["):
            return ZmodSpec(n)
        self._expect("x")
        self._expect("]")
        self._expect("/")
        self._expect("(")
        coeffs = self._poly(n)
        self._expect(")")
        return PolyQuotientSpec(n, coeffs)

    def _poly(self, m: int) -> tuple[int, ...]:
        terms: dict[int, int] = {}
        sign = -1 if self._accept("-") else 1
        while True:
            coeff, degree = self._term()
            terms[degree] = terms.get(degree, 0) + sign * coeff
            if self._accept("+"):
                sign = 1
            elif self._accept("-"):
                sign = -1
            else:
                break
        degree = max(terms)
        coeffs = [0] * (degree + 1)
        for d, c in terms.items():
            coeffs[d] = c % m
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise InvalidParameterError("quotient polynomial", self.text, "degree >= 1")
        if coeffs[-1] != 1:
            raise InvalidParameterError("quotient polynomial", format_polynomial(coeffs), f"a monic polynomial over Z{m}")
        return tuple(coeffs)

    def _term(self) -> tuple[int, int]:
        coeff = 1
        has_coeff = self._peek().isdigit()
        if has_coeff:
            coeff = self._int()
            self._accept("*")
        if self._accept("x"):
            degree = self._int() if self._accept("^") else 1
            return coeff, degree
        if not has_coeff:
            raise self._error("expected a coefficient or 'x'")
        return coeff, 0


def parse_ring_spec(text: str) -> RingSpec:
    """Parse a ring specification.

    Raises:
        RingSpecSyntaxError: On malformed input, with the error position
        InvalidParameterError: For a non-monic quotient or a GF order that is
            not a prime power
    """
    return RingSpec(text, _Parser(text).parse())
