"""First-order equimultiple deformation analysis.

A deformation f + eps*g keeps multiplicity m along the moving point
(x, y) -> (x + eps*a, y + eps*b) exactly when g - a*df/dx - b*df/dy lies
in the m-th power of the maximal ideal.  This module offers that
criterion, an independent direct check that rewrites the deformation in
the shifted coordinates and reads off orders, and a solver for all
admissible constant shifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .jets import AffineSolutionSet, solve_affine, to_jet_vector
from .poly import BiPoly, FirstOrderDef, SectionGerm, dual_substitute
from .singular import CurveGerm, equimult_ideal_jet


@dataclass(frozen=True)
class SectionSolution:
    """Admissible constant shifts (a0, b0) for one deformation direction."""

    solutions: AffineSolutionSet

    @property
    def admits(self) -> bool:
        return not self.solutions.empty

    @property
    def dimension(self) -> Optional[int]:
        return None if self.solutions.empty else self.solutions.dimension

    def sample(self) -> Tuple[Fraction, Fraction]:
        if self.solutions.empty:
            raise ValueError("no admissible section exists")
        a0, b0 = self.solutions.particular
        return a0, b0


def _order_at_least(p: BiPoly, m: int) -> bool:
    # zero counts as order infinity
    return p.is_zero or p.order() >= m


def is_equimultiple_along(f: BiPoly, g: BiPoly, section: SectionGerm) -> bool:
    """Algebraic criterion: order(g - a*df/dx - b*df/dy) >= m."""
    germ = CurveGerm.from_poly(f)
    residual = g - section.a * f.partial("x") - section.b * f.partial("y")
    return _order_at_least(residual, germ.m)


def is_equimultiple_along_direct(f: BiPoly, g: BiPoly, section: SectionGerm) -> bool:
    """Direct check via exact change of coordinates.

    Rewrites f + eps*g in the shifted coordinates by composing with the
    inverse shift (x, y) -> (x - eps*a, y - eps*b) using dual-number
    arithmetic, then requires both the eps^0 and eps^1 components to have
    order >= m there.  Shares no code with the algebraic criterion beyond
    plain polynomial arithmetic; the two must agree on every input.
    """
    germ = CurveGerm.from_poly(f)
    shifted = dual_substitute(FirstOrderDef(f, g), section.inverse())
    return _order_at_least(shifted.base, germ.m) and _order_at_least(shifted.direction, germ.m)


def admits_section(f: BiPoly, g: BiPoly) -> bool:
    """True iff f + eps*g is equimultiple along some section.

    Holds exactly when the truncation of g lies in the jet image of the
    ideal spanned by the two partial derivatives.
    """
    germ = CurveGerm.from_poly(f)
    return equimult_ideal_jet(f).contains(to_jet_vector(g, germ.m))


def solve_sections(f: BiPoly, g: BiPoly) -> SectionSolution:
    """All constant shifts (a0, b0) making f + eps*g equimultiple along the section.

    Only the constant terms of a and b matter: (a - a0)*df/dx already has
    order >= m, so the condition collapses to a linear system on (a0, b0)
    over the jet space.  Every section germ whose components carry these
    constant terms passes :func:`is_equimultiple_along`; the higher-order
    terms are unconstrained.
    """
    germ = CurveGerm.from_poly(f)
    m = germ.m
    columns = [to_jet_vector(f.partial("x"), m), to_jet_vector(f.partial("y"), m)]
    return SectionSolution(solve_affine(columns, to_jet_vector(g, m)))
