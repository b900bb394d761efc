"""Newton-polygon oracle: polygons, nondegeneracy, monomial thresholds."""

from fractions import Fraction as F
from math import gcd

import pytest

from curvejump.oracle import (
    DegenerateCurveError,
    monomial_threshold,
    nondegenerate,
    oracle_jumping_numbers,
    polygon,
)
from curvejump.puiseux import parse

JUST_BELOW_ONE = F(10**9 - 1, 10**9)


def test_polygon_cusp():
    np_ = polygon(parse("x^4 - y^3"))
    assert np_.edges == ((3, 4, 12),)
    assert np_.xmin == 0 and np_.ymin == 0


def test_polygon_two_cusps():
    np_ = polygon(parse("(x^3-y^2)*(x^2-y^3)"))
    assert set(np_.edges) == {(3, 2, 10), (2, 3, 10)}


def test_polygon_node():
    np_ = polygon(parse("x*y"))
    assert np_.edges == () and (np_.xmin, np_.ymin) == (1, 1)


def test_polygon_rejects_units():
    with pytest.raises(ValueError):
        polygon(parse("1 + x"))


def test_nondegenerate():
    assert nondegenerate(parse("x^4 - y^3"))
    assert nondegenerate(parse("(x^3-y^2)*(x^2-y^3)"))
    assert not nondegenerate(parse("(x + y)^2"))


def test_monomial_thresholds():
    cusp = polygon(parse("x^4 - y^3"))
    assert monomial_threshold(cusp, 0, 0) == F(7, 12)
    pair = polygon(parse("(x^3-y^2)*(x^2-y^3)"))
    assert monomial_threshold(pair, 0, 0) == F(1, 2)
    assert monomial_threshold(pair, 2, 0) == F(9, 10)
    node = polygon(parse("x*y"))
    assert monomial_threshold(node, 0, 0) == F(1)


def test_threshold_monotone():
    np_ = polygon(parse("(x^3-y^2)*(x^2-y^3)"))
    for a in range(4):
        for b in range(4):
            assert monomial_threshold(np_, a + 1, b) >= monomial_threshold(np_, a, b)
            assert monomial_threshold(np_, a, b + 1) >= monomial_threshold(np_, a, b)


def test_jump_sets():
    assert oracle_jumping_numbers(parse("x^4 - y^3"), JUST_BELOW_ONE) == [
        F(7, 12), F(5, 6), F(11, 12),
    ]
    assert oracle_jumping_numbers(parse("(x^3-y^2)*(x^2-y^3)"), JUST_BELOW_ONE) == [
        F(1, 2), F(7, 10), F(9, 10),
    ]
    assert oracle_jumping_numbers(parse("x*y"), JUST_BELOW_ONE) == []


def test_bound_truncates():
    got = oracle_jumping_numbers(parse("x^4 - y^3"), F(3, 4))
    assert got == [F(7, 12)]


def test_refuses_degenerate_and_bad_bounds():
    with pytest.raises(DegenerateCurveError):
        oracle_jumping_numbers(parse("(x + y)^2"), F(1, 2))
    with pytest.raises(ValueError):
        oracle_jumping_numbers(parse("x^4 - y^3"), F(1))


def test_closed_form_for_binomials():
    # for x^p - y^q coprime, the set below 1 is {i/p + j/q} with i, j >= 1;
    # recomputed here instead of assumed
    for p in range(2, 10):
        for q in range(p + 1, 10):
            if gcd(p, q) != 1:
                continue
            got = set(oracle_jumping_numbers(parse(f"x^{p} - y^{q}"), JUST_BELOW_ONE))
            want = {
                F(i, p) + F(j, q)
                for i in range(1, p)
                for j in range(1, q)
                if F(i, p) + F(j, q) < 1
            }
            assert got == want, (p, q)
