"""Local invariants of a plane curve germ at the origin.

Everything here is driven by the multiplicity m = order(f) and by exact
rank computations in the jet space of level m: the tangent cone, whether
all m tangent directions coincide (unitangentiality), the image of the
ideal generated by the two partial derivatives modulo the m-th power of
the maximal ideal, the codimension deg_Z of that image, and the dimension
of the space of constant section shifts that act trivially.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .jets import JetSubspace, mono_basis, span, to_jet_vector
from .poly import BiPoly


class InvalidGermError(ValueError):
    """Raised for polynomials that do not define a curve germ at the origin."""


@dataclass(frozen=True)
class CurveGerm:
    """A plane curve germ at the origin: local equation plus cached multiplicity."""

    f: BiPoly
    m: int

    @classmethod
    def from_poly(cls, f: BiPoly) -> "CurveGerm":
        if f.is_zero:
            raise InvalidGermError("zero polynomial does not define a curve")
        c = f.coeff(0, 0)
        if c:
            raise InvalidGermError(f"origin is not on the curve (constant term {c})")
        return cls(f, f.order())


@dataclass(frozen=True)
class SingularityReport:
    """Aggregated local invariants of a germ."""

    m: int
    tangent_cone: BiPoly
    unitangential: bool
    degZ: int
    ambiguity: int


def multiplicity(f: BiPoly) -> int:
    """Multiplicity of the curve f = 0 at the origin (the order of f)."""
    return CurveGerm.from_poly(f).m


def tangent_cone(f: BiPoly) -> BiPoly:
    """Lowest-degree homogeneous part of f; its linear factors are the tangents."""
    germ = CurveGerm.from_poly(f)
    return f.homogeneous_part(germ.m)


def unitangential_by_pattern(f: BiPoly) -> bool:
    """Decide unitangentiality by matching binomial coefficients directly.

    The tangent cone is the m-th power of a single linear form exactly when
    its coefficient list along x^(m-k)*y^k is c * C(m,k) * t^k for fixed c
    and t, or is a pure power of x or of y.  This is an oracle independent
    of any rank computation and is used to cross-check
    :func:`is_unitangential`.
    """
    germ = CurveGerm.from_poly(f)
    m = germ.m
    cone = f.homogeneous_part(m)
    coeffs = [cone.coeff(m - k, k) for k in range(m + 1)]
    support = [k for k, c in enumerate(coeffs) if c]
    if len(support) == 1:
        # single monomial c*x^(m-k)*y^k: an m-th power only for k = 0 or k = m
        return support[0] in (0, m)
    if not coeffs[0] or any(not c for c in coeffs):
        # a power of a*x + b*y with a, b both nonzero has full support
        return False
    t = coeffs[1] / (coeffs[0] * m)
    return all(coeffs[k] == coeffs[0] * comb(m, k) * t**k for k in range(2, m + 1))


def equimult_ideal_jet(f: BiPoly) -> JetSubspace:
    """Image of the ideal (df/dx, df/dy) in the jet space of level m.

    Any multiple u * df/dv with order(u) >= 1 has order >= m and vanishes
    in degree < m, so the two generators alone already span the image; the
    test suite verifies this against a brute-force span over all monomial
    multiples.  The truncated generators only see the tangent cone, which
    is asserted below.
    """
    germ = CurveGerm.from_poly(f)
    m = germ.m
    vx = to_jet_vector(f.partial("x"), m)
    vy = to_jet_vector(f.partial("y"), m)
    cone = f.homogeneous_part(m)
    if vx != to_jet_vector(cone.partial("x"), m) or vy != to_jet_vector(cone.partial("y"), m):
        raise AssertionError("truncated partials must agree with the tangent cone's partials")
    return span([vx, vy], basis=mono_basis(m))


def is_unitangential(f: BiPoly) -> bool:
    """True iff all m tangent directions of the germ coincide.

    Decided by the rank of the truncated partials of the tangent cone:
    rank 1 means proportional partials, i.e. an m-th power of a linear
    form; rank 2 means at least two distinct tangents.  Rational rank
    suffices even though tangent directions may be complex: if the cone
    is the m-th power of any complex linear form, its partials are
    proportional, and proportionality of rational vectors is visible over
    the rationals.  The binomial-pattern oracle is evaluated as well and
    must agree.
    """
    rank = equimult_ideal_jet(f).rank
    by_rank = rank == 1
    by_pattern = unitangential_by_pattern(f)
    if by_rank != by_pattern:
        raise AssertionError(
            f"unitangentiality cross-check failed for {f}: rank says {by_rank}, "
            f"pattern says {by_pattern}"
        )
    return by_rank


def deg_Z(f: BiPoly) -> int:
    """Codimension of the truncated partial-derivative ideal in the jet space.

    Counts the independent linear conditions the multiple point fails to
    impose; equals m*(m+1)/2 - 1 at unitangential germs and
    m*(m+1)/2 - 2 otherwise.
    """
    germ = CurveGerm.from_poly(f)
    m = germ.m
    return m * (m + 1) // 2 - equimult_ideal_jet(f).rank


def section_ambiguity(f: BiPoly) -> int:
    """Dimension of the constant shifts (a0, b0) with a0*df/dx + b0*df/dy = 0 in degree < m.

    Always 0 or 1: the truncated partials never both vanish, and the
    kernel is a line exactly at unitangential germs.
    """
    germ = CurveGerm.from_poly(f)
    return 2 - equimult_ideal_jet(f).rank


def analyze(f: BiPoly) -> SingularityReport:
    """Compute the full set of local invariants of the germ."""
    germ = CurveGerm.from_poly(f)
    m = germ.m
    rank = equimult_ideal_jet(f).rank
    return SingularityReport(
        m=m,
        tangent_cone=f.homogeneous_part(m),
        unitangential=is_unitangential(f),
        degZ=m * (m + 1) // 2 - rank,
        ambiguity=2 - rank,
    )
