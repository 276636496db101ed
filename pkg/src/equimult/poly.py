"""Exact sparse bivariate polynomials over the rationals.

A polynomial in x and y is stored as a dictionary mapping exponent pairs
``(i, j)`` to nonzero rational coefficients, so arithmetic is exact and
identity testing is reliable.  The module also provides the dual extension
``base + eps*direction`` with ``eps**2 = 0`` used to model first-order
deformations, and the shifted-coordinate composition ``dual_substitute``.

All values are immutable after construction and all operations are pure,
so they can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Tuple, Union

Rational = Fraction
Exponent = Tuple[int, int]
Scalar = Union[int, Fraction]


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs the lowest-degree term of the zero polynomial."""


def grlex_key(exponent: Exponent) -> Tuple[int, int]:
    """Sort key for the graded order: by total degree, then x-power descending.

    Produces 1, x, y, x^2, x*y, y^2, ... which is the canonical term order
    used everywhere in this package (polynomial rendering, jet bases,
    matrix row/column indexing).
    """
    i, j = exponent
    return (i + j, j)


class BiPoly:
    """Sparse bivariate polynomial with exact rational coefficients.

    Instances are immutable; arithmetic returns new objects in canonical
    form (no zero coefficients stored).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        canonical: dict[Exponent, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial x^{i}*y^{j}")
                c = Fraction(c)
                if c:
                    canonical[(i, j)] = c
        object.__setattr__(self, "_terms", canonical)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("BiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def variable(cls, name: str) -> "BiPoly":
        if name == "x":
            return cls({(1, 0): 1})
        if name == "y":
            return cls({(0, 1): 1})
        raise ValueError(f"unknown variable {name!r}; only x and y exist")

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "BiPoly":
        return cls({(i, j): c})

    # -- basic queries ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Yield (exponent, coefficient) pairs in the canonical graded order."""
        for e in sorted(self._terms, key=grlex_key):
            yield e, self._terms[e]

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def total_degree(self) -> int:
        """Maximum total degree of a stored term; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def order(self) -> int:
        """Minimum total degree of a stored term (the multiplicity at the origin)."""
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no order")
        return min(i + j for i, j in self._terms)

    # -- truncations and derivatives ----------------------------------------

    def jet(self, k: int) -> "BiPoly":
        """Truncate to total degree <= k.  jet(-1) is the zero polynomial."""
        if k < -1:
            raise ValueError(f"jet degree must be >= -1, got {k}")
        return BiPoly({e: c for e, c in self._terms.items() if e[0] + e[1] <= k})

    def homogeneous_part(self, k: int) -> "BiPoly":
        """The sum of exactly the total-degree-k terms."""
        if k < 0:
            raise ValueError(f"homogeneous degree must be >= 0, got {k}")
        return BiPoly({e: c for e, c in self._terms.items() if e[0] + e[1] == k})

    def partial(self, var: str) -> "BiPoly":
        """Formal partial derivative with respect to "x" or "y"."""
        if var not in ("x", "y"):
            raise ValueError(f"unknown variable {var!r}; only x and y exist")
        out: dict[Exponent, Fraction] = {}
        for (i, j), c in self._terms.items():
            if var == "x" and i > 0:
                out[(i - 1, j)] = c * i
            elif var == "y" and j > 0:
                out[(i, j - 1)] = c * j
        return BiPoly(out)

    def substitute(self, sx: "BiPoly", sy: "BiPoly") -> "BiPoly":
        """Evaluate self at x = sx, y = sy, fully expanded."""
        xpow: dict[int, BiPoly] = {0: BiPoly.one()}
        ypow: dict[int, BiPoly] = {0: BiPoly.one()}

        def power(cache: dict[int, BiPoly], base: "BiPoly", n: int) -> "BiPoly":
            while n not in cache:
                top = max(cache)
                cache[top + 1] = cache[top] * base
            return cache[n]

        out = BiPoly.zero()
        for (i, j), c in self._terms.items():
            out = out + power(xpow, sx, i) * power(ypow, sy, j) * c
        return out

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return BiPoly(out)

    def __radd__(self, other: Scalar) -> "BiPoly":
        return self.__add__(other)

    def __sub__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return BiPoly(out)

    def __rsub__(self, other: Scalar) -> "BiPoly":
        return (-self).__add__(other)

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return BiPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return BiPoly(out)

    def __rmul__(self, other: Scalar) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: Scalar) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = BiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        """Canonical text form, parseable by the CLI grammar.

        Terms appear in the graded order; only the first term may carry a
        unary minus, later signs are the binary +/- separators.
        """
        if not self._terms:
            return "0"
        parts: list[str] = []
        for k, (e, c) in enumerate(self.terms()):
            body = _render_term(e, abs(c))
            if k == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"


def _render_term(exponent: Exponent, coeff: Fraction) -> str:
    i, j = exponent
    factors = []
    if i:
        factors.append("x" if i == 1 else f"x^{i}")
    if j:
        factors.append("y" if j == 1 else f"y^{j}")
    if not factors:
        return str(coeff)
    if coeff != 1:
        factors.insert(0, str(coeff))
    return "*".join(factors)


@dataclass(frozen=True)
class FirstOrderDef:
    """Dual polynomial base + eps*direction with eps**2 = 0.

    Models a first-order deformation of the curve cut out by ``base`` in
    the direction ``direction``.
    """

    base: BiPoly
    direction: BiPoly

    def __add__(self, other: "FirstOrderDef") -> "FirstOrderDef":
        if not isinstance(other, FirstOrderDef):
            return NotImplemented
        return FirstOrderDef(self.base + other.base, self.direction + other.direction)

    def __mul__(self, other: Union["FirstOrderDef", BiPoly, Scalar]) -> "FirstOrderDef":
        if isinstance(other, FirstOrderDef):
            # (p1 + eps q1)(p2 + eps q2) with eps^2 = 0
            return FirstOrderDef(
                self.base * other.base,
                self.base * other.direction + self.direction * other.base,
            )
        if isinstance(other, (BiPoly, int, Fraction)):
            return FirstOrderDef(self.base * other, self.direction * other)
        return NotImplemented

    def __pow__(self, n: int) -> "FirstOrderDef":
        if not isinstance(n, int) or n < 0:
            raise ValueError("dual powers must be nonnegative integers")
        result = FirstOrderDef(BiPoly.one(), BiPoly.zero())
        for _ in range(n):
            result = result * self
        return result

    def __str__(self) -> str:
        return f"({self.base}) + eps*({self.direction})"


@dataclass(frozen=True)
class SectionGerm:
    """First-order family of marked points (x, y) -> (x + eps*a, y + eps*b)."""

    a: BiPoly
    b: BiPoly

    @classmethod
    def constants(cls, a0: Scalar, b0: Scalar) -> "SectionGerm":
        return cls(BiPoly.constant(a0), BiPoly.constant(b0))

    def constant_part(self) -> Tuple[Fraction, Fraction]:
        """The pair (a(0,0), b(0,0)) of constant terms."""
        return (self.a.coeff(0, 0), self.b.coeff(0, 0))

    def inverse(self) -> "SectionGerm":
        """The section undoing this one to first order: (x, y) -> (x - eps*a, y - eps*b)."""
        return SectionGerm(-self.a, -self.b)


def dual_substitute(deformation: FirstOrderDef, section: SectionGerm) -> FirstOrderDef:
    """Compose base + eps*direction with x -> x + eps*a, y -> y + eps*b.

    The composition is carried out term by term with genuine dual-number
    arithmetic (eps**2 = 0), with no truncation and no appeal to the
    first-order Taylor formula; agreement with that formula is a theorem
    checked by the test suite, not an assumption of this code.
    """
    sx = FirstOrderDef(BiPoly.variable("x"), section.a)
    sy = FirstOrderDef(BiPoly.variable("y"), section.b)
    xpow: dict[int, FirstOrderDef] = {0: FirstOrderDef(BiPoly.one(), BiPoly.zero())}
    ypow: dict[int, FirstOrderDef] = {0: FirstOrderDef(BiPoly.one(), BiPoly.zero())}

    def power(cache: dict[int, FirstOrderDef], base: FirstOrderDef, n: int) -> FirstOrderDef:
        while n not in cache:
            top = max(cache)
            cache[top + 1] = cache[top] * base
        return cache[n]

    # eps * direction(x + eps*a, y + eps*b) = eps * direction(x, y): the shift
    # inside an eps-term is invisible, so the direction passes through unchanged.
    out = FirstOrderDef(BiPoly.zero(), deformation.direction)
    for (i, j), c in deformation.base.terms():
        out = out + power(xpow, sx, i) * power(ypow, sy, j) * c
    return out
