"""Degree-d curves through an m-fold point: dimension counts and the Jacobian block."""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

import pytest

from equimult import (
    BiPoly,
    DegreeBoundError,
    PlaneCurve,
    affine_monomials,
    deg_Z,
    dim_linear_system,
    expected_dim_Lm,
    h0_JZ,
    jacobian_block,
    tangent_dim_Lm,
    verify_smooth_expected,
)

from _corpus import curated_germs, random_germ, unitangential_germ

X = BiPoly.variable("x")
Y = BiPoly.variable("y")


def test_affine_monomials_graded():
    assert affine_monomials(2) == ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
    assert len(affine_monomials(6)) == 28


@pytest.mark.parametrize("d,expected", [(1, 2), (2, 5), (3, 9), (4, 14), (6, 27)])
def test_dim_linear_system(d, expected):
    assert dim_linear_system(d) == expected


def test_dim_linear_system_rejects_bad_degree():
    with pytest.raises(ValueError):
        dim_linear_system(0)


def test_expected_dim():
    assert expected_dim_Lm(3, 2) == 8
    assert expected_dim_Lm(4, 3) == 10
    assert expected_dim_Lm(1, 1) == 3


def test_plane_curve_validation():
    with pytest.raises(DegreeBoundError):
        PlaneCurve(X * Y, 1)
    with pytest.raises(ValueError):
        PlaneCurve(X, 0)
    c = PlaneCurve(Y ** 2 - X ** 3, 5)
    assert c.m == 2 and c.d == 5


@pytest.mark.parametrize(
    "f,d,h0",
    [
        (X * Y + X ** 3 + Y ** 3, 3, 9),
        (Y ** 2 - X ** 3, 3, 8),
        (X ** 3 + Y ** 3 + X ** 4, 4, 11),
        (X ** 3 + Y ** 4, 4, 10),
    ],
)
def test_h0_known_values(f, d, h0):
    assert h0_JZ(PlaneCurve(f, d)) == h0


def test_h0_monotone_in_degree():
    rng = random.Random(41)
    for _ in range(10):
        f = random_germ(rng, rng.randint(1, 4))
        base_d = max(f.total_degree(), f.order())
        values = [h0_JZ(PlaneCurve(f, d)) for d in range(base_d, base_d + 3)]
        assert values[0] < values[1] < values[2]


def test_h0_equals_count_minus_degz():
    rng = random.Random(42)
    germs = list(curated_germs()) + [random_germ(rng, rng.randint(1, 5)) for _ in range(15)]
    for f in germs:
        d = max(f.total_degree(), f.order())
        assert h0_JZ(PlaneCurve(f, d)) == (d + 2) * (d + 1) // 2 - deg_Z(f)


def test_tangent_dimension_branches():
    assert tangent_dim_Lm(PlaneCurve(X * Y + X ** 3 + Y ** 3, 3)) == 8
    assert tangent_dim_Lm(PlaneCurve(Y ** 2 - X ** 3, 3)) == 6


def test_verify_smooth_expected_plain():
    rep = verify_smooth_expected(PlaneCurve(X * Y + X ** 3 + Y ** 3, 3))
    assert not rep.unitangential
    assert rep.tangent_dim == rep.expected_dim == 8
    assert rep.smooth_of_expected
    assert rep.dim_L == 9 and rep.h0_JZ == 9


def test_verify_smooth_expected_flags_unitangential():
    rep = verify_smooth_expected(PlaneCurve(Y ** 2 - X ** 3, 3))
    assert rep.unitangential
    assert rep.tangent_dim == 6 and rep.expected_dim == 8
    assert not rep.smooth_of_expected  # reported, never asserted away


def test_verify_smooth_expected_triple_point():
    rep = verify_smooth_expected(PlaneCurve(X ** 3 + Y ** 3 + X ** 4, 4))
    assert rep.tangent_dim == rep.expected_dim == 10
    assert rep.smooth_of_expected


def test_unitangential_tangent_always_two_below_expected():
    rng = random.Random(43)
    for _ in range(10):
        m = rng.randint(2, 4)
        f = unitangential_germ(rng, m)
        d = max(f.total_degree(), m)
        rep = verify_smooth_expected(PlaneCurve(f, d))
        assert rep.unitangential
        assert rep.tangent_dim == rep.expected_dim - 2


def test_jacobian_block_shape_and_diagonal():
    block = jacobian_block(PlaneCurve(X ** 3 + Y ** 3 + X ** 4, 4))
    assert block.rank == 6
    assert block.row_index == ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
    assert block.column_index[:2] == ("x", "y")
    assert len(block.column_index) == 2 + 15
    diag = [block.matrix[r][2 + r] for r in range(6)]
    assert diag == [Fraction(factorial(i) * factorial(j)) for i, j in block.row_index]


def test_jacobian_first_columns_hold_partials():
    f = Y ** 2 - X ** 3
    block = jacobian_block(PlaneCurve(f, 3))
    # row (i, j) differentiates d^(i+j) f/dx^i dy^j once more by x and y
    for r, (i, j) in enumerate(block.row_index):
        da = f
        for _ in range(i):
            da = da.partial("x")
        for _ in range(j):
            da = da.partial("y")
        assert block.matrix[r][0] == da.partial("x").coeff(0, 0)
        assert block.matrix[r][1] == da.partial("y").coeff(0, 0)


def test_jacobian_rank_independent_of_equation():
    rng = random.Random(44)
    for _ in range(12):
        m = rng.randint(1, 5)
        f = random_germ(rng, m)
        d = max(f.total_degree(), m)
        block = jacobian_block(PlaneCurve(f, d))
        assert block.rank == m * (m + 1) // 2
