"""Dimension counts for curves of bounded degree in the projective plane.

A curve of degree <= d through a marked m-fold point is studied in an
affine chart with the point at the origin.  Global sections of degree d
are identified with polynomials of total degree <= d in the chart, which
turns the tangent-space computation for the stratum of m-fold points into
exact linear algebra: count the degree-<=-d polynomials whose jet lies in
the truncated partial-derivative ideal, correct by the section ambiguity,
and compare with the expected dimension.  A Jacobian block built from the
defining equations of the stratum certifies the rank bound behind the
smoothness statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Tuple

from .jets import mono_basis, row_reduce, span, to_jet_vector
from .poly import BiPoly, Exponent, grlex_key
from .singular import CurveGerm, equimult_ideal_jet, is_unitangential


class DegreeBoundError(ValueError):
    """Raised when a curve's equation does not fit the declared degree bound."""


@dataclass(frozen=True)
class PlaneCurve:
    """Affine equation of a plane curve with the marked point at the origin.

    ``d`` bounds the total degree; it is the degree of the ambient linear
    system, not of f itself.
    """

    f: BiPoly
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"degree bound must be >= 1, got {self.d}")
        germ = CurveGerm.from_poly(self.f)
        if self.f.total_degree() > self.d:
            raise DegreeBoundError(
                f"equation has total degree {self.f.total_degree()}, "
                f"above the degree bound {self.d}"
            )
        object.__setattr__(self, "_m", germ.m)

    @property
    def m(self) -> int:
        return self._m


@dataclass(frozen=True)
class JacobianBlock:
    """Exact Jacobian of the jet-vanishing equations at the marked curve.

    Rows are indexed by the vanishing derivatives (i, j) with i+j < m;
    columns are the chart coordinates x, y followed by one coefficient
    per monomial of total degree <= d.
    """

    row_index: Tuple[Exponent, ...]
    column_index: Tuple[str, ...]
    matrix: Tuple[Tuple[Fraction, ...], ...]
    rank: int


@dataclass(frozen=True)
class DimensionReport:
    """Tangent-space versus expected dimension at one marked curve."""

    d: int
    m: int
    dim_L: int
    h0_JZ: int
    tangent_dim: int
    expected_dim: int
    unitangential: bool
    smooth_of_expected: bool


@lru_cache(maxsize=None)
def affine_monomials(d: int) -> Tuple[Exponent, ...]:
    """Monomials of total degree <= d in the canonical graded order."""
    return tuple(
        sorted(((i, j) for k in range(d + 1) for i in range(k + 1) for j in (k - i,)), key=grlex_key)
    )


def dim_linear_system(d: int) -> int:
    """Projective dimension of the curves of degree d: (d+2)(d+1)/2 - 1."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    return (d + 2) * (d + 1) // 2 - 1


def expected_dim_Lm(d: int, m: int) -> int:
    """Expected dimension of the stratum of marked m-fold points of degree-d curves."""
    if m < 1:
        raise ValueError(f"multiplicity must be >= 1, got {m}")
    return dim_linear_system(d) - m * (m + 1) // 2 + 2


def h0_JZ(curve: PlaneCurve) -> int:
    """Dimension of the degree-<=-d polynomials whose jet lies in the germ's ideal image.

    Built as an explicit constraint system: each monomial coefficient of a
    candidate polynomial contributes its residue modulo the ideal image,
    and the answer is the kernel dimension, i.e. the monomial count minus
    the rank of those residues.  No counting formula is used here; the
    equality with (d+2)(d+1)/2 - deg_Z is a test-suite fact.
    """
    m = curve.m
    ideal = equimult_ideal_jet(curve.f)
    monomials = affine_monomials(curve.d)
    residues = []
    for i, j in monomials:
        if i + j >= m:
            continue  # jet is zero: the coefficient is unconstrained
        r = ideal.reduce(to_jet_vector(BiPoly.monomial(i, j), m))
        if not r.is_zero:
            residues.append(r)
    constraints = span(residues, basis=mono_basis(m)).rank
    return len(monomials) - constraints


def tangent_dim_Lm(curve: PlaneCurve) -> int:
    """Tangent-space dimension of the stratum at the marked curve.

    One correction for scaling the equation plus, at unitangential germs
    only, one more for the section shift that acts trivially.
    """
    correction = 2 if is_unitangential(curve.f) else 1
    return h0_JZ(curve) - correction


def _iterated_partial(p: BiPoly, i: int, j: int) -> BiPoly:
    for _ in range(i):
        p = p.partial("x")
    for _ in range(j):
        p = p.partial("y")
    return p


def jacobian_block(curve: PlaneCurve) -> JacobianBlock:
    """Jacobian of the equations "all derivatives of order < m vanish at the point".

    The equations are the derivatives of f plus the generic coefficient
    perturbation along every monomial of degree <= d; the Jacobian is
    taken with respect to (x, y, coefficients) and evaluated at the
    origin with zero perturbation.  The columns for the perturbation
    coefficients of degree < m form a diagonal block with entries i!*j!,
    which forces rank m*(m+1)/2 independently of f; both facts are
    checked here rather than assumed.
    """
    m, d = curve.m, curve.d
    equations = mono_basis(m).monomials
    monomials = affine_monomials(d)
    matrix = []
    for i, j in equations:
        da = _iterated_partial(curve.f, i, j)
        row = [da.partial("x").coeff(0, 0), da.partial("y").coeff(0, 0)]
        for k, l in monomials:
            row.append(_iterated_partial(BiPoly.monomial(k, l), i, j).coeff(0, 0))
        matrix.append(row)

    block_size = len(equations)
    for r, (i, j) in enumerate(equations):
        for c, (k, l) in enumerate(monomials[:block_size]):
            entry = matrix[r][2 + c]
            want = Fraction(factorial(i) * factorial(j)) if (k, l) == (i, j) else Fraction(0)
            if entry != want:
                raise AssertionError(
                    f"perturbation block is not diagonal at row {(i, j)}, column {(k, l)}"
                )
    _, pivots = row_reduce(matrix)
    rank = len(pivots)
    if rank != block_size:
        raise AssertionError(f"Jacobian rank {rank} differs from {block_size}")

    columns = ("x", "y") + tuple(f"a[{k},{l}]" for k, l in monomials)
    return JacobianBlock(
        row_index=equations,
        column_index=columns,
        matrix=tuple(tuple(r) for r in matrix),
        rank=rank,
    )


def verify_smooth_expected(curve: PlaneCurve) -> DimensionReport:
    """Full dimension report for the stratum at the marked curve.

    At non-unitangential germs the tangent and expected dimensions must
    agree and a violation raises; at unitangential germs the tangent
    space sits strictly below the expected dimension, which is reported
    and flagged rather than asserted away.
    """
    m = curve.m
    if curve.d < m:
        raise DegreeBoundError(
            f"degree bound {curve.d} is below the multiplicity {m}"
        )
    uni = is_unitangential(curve.f)
    h0 = h0_JZ(curve)
    tangent = tangent_dim_Lm(curve)
    expected = expected_dim_Lm(curve.d, m)
    jacobian_block(curve)  # certifies the rank bound; raises on failure
    if not uni and tangent != expected:
        raise AssertionError(
            f"tangent dimension {tangent} differs from expected {expected} "
            "at a non-unitangential germ"
        )
    return DimensionReport(
        d=curve.d,
        m=m,
        dim_L=dim_linear_system(curve.d),
        h0_JZ=h0,
        tangent_dim=tangent,
        expected_dim=expected,
        unitangential=uni,
        smooth_of_expected=tangent == expected,
    )
