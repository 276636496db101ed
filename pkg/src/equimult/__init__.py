"""Exact equimultiplicity computations for plane curve germs.

The package works over the rationals throughout.  ``poly`` and ``jets``
provide the arithmetic substrate (sparse bivariate polynomials, truncated
jet spaces, exact row reduction); ``singular`` computes local invariants
of a germ, ``defo`` decides and solves the section condition for
first-order deformations, and ``plane`` compares tangent and expected
dimensions of equimultiple families of projective curves.
"""

from .defo import (
    SectionSolution,
    admits_section,
    is_equimultiple_along,
    is_equimultiple_along_direct,
    solve_sections,
)
from .jets import (
    AffineSolutionSet,
    BasisMismatchError,
    JetSubspace,
    JetVector,
    MonoBasis,
    mono_basis,
    row_reduce,
    solve_affine,
    span,
    to_jet_vector,
)
from .plane import (
    DegreeBoundError,
    DimensionReport,
    JacobianBlock,
    PlaneCurve,
    affine_monomials,
    dim_linear_system,
    expected_dim_Lm,
    h0_JZ,
    jacobian_block,
    tangent_dim_Lm,
    verify_smooth_expected,
)
from .poly import (
    BiPoly,
    FirstOrderDef,
    Rational,
    SectionGerm,
    ZeroPolynomialError,
    dual_substitute,
)
from .singular import (
    CurveGerm,
    InvalidGermError,
    SingularityReport,
    analyze,
    deg_Z,
    equimult_ideal_jet,
    is_unitangential,
    multiplicity,
    section_ambiguity,
    tangent_cone,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSolutionSet",
    "BasisMismatchError",
    "BiPoly",
    "CurveGerm",
    "DegreeBoundError",
    "DimensionReport",
    "FirstOrderDef",
    "InvalidGermError",
    "JacobianBlock",
    "JetSubspace",
    "JetVector",
    "MonoBasis",
    "PlaneCurve",
    "Rational",
    "SectionGerm",
    "SectionSolution",
    "SingularityReport",
    "ZeroPolynomialError",
    "admits_section",
    "affine_monomials",
    "analyze",
    "deg_Z",
    "dim_linear_system",
    "dual_substitute",
    "equimult_ideal_jet",
    "expected_dim_Lm",
    "h0_JZ",
    "is_equimultiple_along",
    "is_equimultiple_along_direct",
    "is_unitangential",
    "jacobian_block",
    "mono_basis",
    "multiplicity",
    "row_reduce",
    "section_ambiguity",
    "solve_affine",
    "solve_sections",
    "span",
    "tangent_cone",
    "tangent_dim_Lm",
    "to_jet_vector",
    "verify_smooth_expected",
]
