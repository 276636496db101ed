"""Equimultiple deformation criteria and section solving."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from equimult import (
    BiPoly,
    FirstOrderDef,
    SectionGerm,
    admits_section,
    dual_substitute,
    is_equimultiple_along,
    is_equimultiple_along_direct,
    is_unitangential,
    multiplicity,
    solve_sections,
)

from _corpus import random_germ, random_poly, unitangential_germ

X = BiPoly.variable("x")
Y = BiPoly.variable("y")


def test_section_zero_direction_zero():
    # f + eps*0 is trivially equimultiple along the zero section
    f = Y ** 2 - X ** 3
    s = SectionGerm.constants(0, 0)
    assert is_equimultiple_along(f, BiPoly.zero(), s)
    assert is_equimultiple_along_direct(f, BiPoly.zero(), s)


def test_known_verdicts():
    f = Y ** 2
    assert is_equimultiple_along(f, Y, SectionGerm.constants(0, Fraction(1, 2)))
    assert not is_equimultiple_along(f, Y, SectionGerm.constants(0, 0))
    assert not admits_section(f, X)
    assert admits_section(f, Y)
    assert admits_section(X * Y, Y)


def test_solve_sections_line_of_solutions():
    sol = solve_sections(Y ** 2, Y)
    assert sol.admits and sol.dimension == 1
    assert sol.solutions.particular == (Fraction(0), Fraction(1, 2))
    assert sol.solutions.directions == ((Fraction(1), Fraction(0)),)


def test_solve_sections_unique_point():
    sol = solve_sections(X * Y, Y)
    assert sol.admits and sol.dimension == 0
    assert sol.sample() == (Fraction(1), Fraction(0))


def test_solve_sections_none():
    sol = solve_sections(Y ** 2, X)
    assert not sol.admits
    assert sol.dimension is None
    with pytest.raises(ValueError):
        sol.sample()


def test_solutions_actually_work():
    rng = random.Random(31)
    checked = 0
    while checked < 30:
        m = rng.randint(2, 4)
        f = unitangential_germ(rng, m) if rng.random() < 0.5 else random_germ(rng, m)
        a0 = Fraction(rng.randint(-3, 3))
        b0 = Fraction(rng.randint(-3, 3))
        g = a0 * f.partial("x") + b0 * f.partial("y") + random_poly(rng, 5).jet(5) * X ** m
        if g.is_zero:
            continue
        sol = solve_sections(f, g)
        assert sol.admits
        for a, b in sol.solutions.points():
            s = SectionGerm.constants(a, b)
            assert is_equimultiple_along(f, g, s)
            assert is_equimultiple_along_direct(f, g, s)
        checked += 1


def test_two_criteria_agree_on_random_tuples():
    rng = random.Random(32)
    agreements = {True: 0, False: 0}
    for k in range(150):
        f = random_germ(rng, rng.randint(1, 4))
        a = random_poly(rng, 3, allow_zero=True)
        b = random_poly(rng, 3, allow_zero=True)
        if k % 3 == 0:
            # force a positive instance for this very section
            tail = random_poly(rng, 2, allow_zero=True) * X ** multiplicity(f)
            g = a * f.partial("x") + b * f.partial("y") + tail
        else:
            g = random_poly(rng, 4, allow_zero=True)
        s = SectionGerm(a, b)
        one = is_equimultiple_along(f, g, s)
        two = is_equimultiple_along_direct(f, g, s)
        assert one == two
        agreements[one] += 1
    # the sample must exercise both verdicts to mean anything
    assert agreements[True] > 0 and agreements[False] > 0


def test_only_constant_terms_matter():
    rng = random.Random(33)
    for _ in range(40):
        f = random_germ(rng, rng.randint(1, 4))
        g = random_poly(rng, 4, allow_zero=True)
        a = random_poly(rng, 3, allow_zero=True)
        b = random_poly(rng, 3, allow_zero=True)
        full = SectionGerm(a, b)
        collapsed = SectionGerm.constants(*full.constant_part())
        assert is_equimultiple_along(f, g, full) == is_equimultiple_along(f, g, collapsed)


def test_admits_section_matches_solver():
    rng = random.Random(34)
    for _ in range(40):
        f = random_germ(rng, rng.randint(1, 4))
        g = random_poly(rng, 4, allow_zero=True)
        assert admits_section(f, g) == solve_sections(f, g).admits


def test_solution_dimension_tracks_tangent_type():
    rng = random.Random(35)
    for _ in range(25):
        m = rng.randint(2, 5)
        f = unitangential_germ(rng, m) if rng.random() < 0.5 else random_germ(rng, m)
        g = f.partial("x") - 2 * f.partial("y")
        sol = solve_sections(f, g)
        assert sol.admits
        assert sol.dimension == (1 if is_unitangential(f) else 0)


def test_taylor_identity():
    """f + eps*(a*fx + b*fy + h) equals (f, h) composed with the shift."""
    rng = random.Random(36)
    for _ in range(40):
        f = random_poly(rng, 4, allow_zero=True)
        h = random_poly(rng, 3, allow_zero=True)
        a = random_poly(rng, 2, allow_zero=True)
        b = random_poly(rng, 2, allow_zero=True)
        lhs = FirstOrderDef(f, a * f.partial("x") + b * f.partial("y") + h)
        rhs = dual_substitute(FirstOrderDef(f, h), SectionGerm(a, b))
        assert lhs == rhs


def test_deeper_sections_change_nothing_beyond_constants():
    # moving the section by pure higher-order terms keeps every verdict
    f = Y ** 2 - X ** 3
    g = f.partial("y")  # admits (0, 1)
    base = SectionGerm.constants(0, 1)
    fancy = SectionGerm(X ** 2 - Y ** 3, 1 + X * Y)
    assert is_equimultiple_along(f, g, base)
    assert is_equimultiple_along(f, g, fancy)
    assert multiplicity(f) == 2
