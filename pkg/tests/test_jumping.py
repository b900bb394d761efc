"""Jumping numbers: candidates, the contribution criterion, unloading."""

import itertools
import random
from fractions import Fraction as F

import pytest

from curvejump.cluster import InvariantViolation
from curvejump.jumping import (
    DivisorVector,
    antinef_closure,
    candidates,
    contributes,
    contribution_report,
    is_jumping,
    jumping_numbers,
    multiplier_vector,
    relevant,
    skoda_shift,
)
from curvejump.resolution import resolve

from corpus import cusp34, resolution_corpus, two_cusps


@pytest.fixture(scope="module")
def cusp():
    return resolve(cusp34())


@pytest.fixture(scope="module")
def pair():
    return resolve(two_cusps())


@pytest.fixture(scope="module")
def corpus():
    return resolution_corpus(1717, 60, beta0_max=8)


# ---------------------------------------------------------------------------
# candidates and the criterion


def test_candidates(cusp):
    assert candidates(cusp, 0, 1) == [F(2, 3), F(1)]
    assert candidates(cusp, 3, 1) == [
        F(7, 12), F(8, 12), F(9, 12), F(10, 12), F(11, 12), F(1),
    ]


def test_candidates_of_trivial_divisor():
    from curvejump.branch import CharExponents
    from curvejump.cluster import build_diagram

    r = resolve(build_diagram([(CharExponents((1,)), 1)]))
    # a = 1, k = 1: candidates are the integers from 2 up (a smooth germ's
    # own point adds nothing below 2)
    assert candidates(r, 0, 3) == [F(2), F(3)]


def test_contributes(cusp):
    assert contributes(cusp, 3, F(11, 12)) is True
    assert contributes(cusp, 2, F(5, 8)) is False
    assert contributes(cusp, 2, F(7, 8)) is False
    with pytest.raises(ValueError):
        contributes(cusp, 3, F(1, 2))


def test_contribution_value_is_two(cusp):
    # -(floor(11/12 pullback) . E3) equals exactly 2
    from curvejump.jumping import _floor_pullback_dot

    assert -_floor_pullback_dot(cusp, F(11, 12), 3) == 2


def test_relevant(cusp, pair):
    assert relevant(cusp, 3) == (True, F(11, 12))
    assert relevant(cusp, 0) == (False, None)
    assert relevant(pair, 3) == (True, F(9, 10))
    assert relevant(pair, 4) == (True, F(9, 10))
    assert relevant(pair, 0) == (False, None)


# ---------------------------------------------------------------------------
# multiplier vectors and unloading


def test_multiplier_vectors(cusp):
    at = multiplier_vector(cusp, F(7, 12), "at")
    assert at.exc == (0, 0, 0, 1) and at.strict == (0,)
    left = multiplier_vector(cusp, F(7, 12), "left-limit")
    assert left.exc == (0, 0, 0, 0) and left.strict == (0,)
    tiny = multiplier_vector(cusp, F(1, 13), "at")
    assert tiny.exc == (0, 0, 0, 0) and tiny.strict == (0,)


def test_closure_examples(cusp):
    assert antinef_closure(cusp, DivisorVector((0, 0, 0, 1), (0,))).exc == (1, 1, 2, 3)
    assert antinef_closure(cusp, DivisorVector((3, 4, 8, 12), (1,))).exc == (3, 4, 8, 12)
    assert antinef_closure(cusp, DivisorVector((0, 0, 0, 0), (0,))).exc == (0, 0, 0, 0)


def test_closure_rejects_negative(cusp):
    with pytest.raises(ValueError):
        antinef_closure(cusp, DivisorVector((-1, 0, 0, 0), (0,)))


def test_closure_properties(corpus):
    rng = random.Random(12)
    for r in corpus[:25]:
        n = r.nexc()
        vec = DivisorVector(
            tuple(rng.randint(0, 4) for _ in range(n)),
            tuple(rng.randint(0, 2) for _ in r.strict_names),
        )
        cl = antinef_closure(r, vec)
        # antinef, dominates, idempotent
        for j in range(n):
            dot = sum(
                (cl.exc[i] if i < n else cl.strict[i - n]) * e
                for i, e in r.sparse[j]
            )
            assert dot <= 0
        assert vec <= cl
        assert antinef_closure(r, cl) == cl
        # monotone
        bigger = DivisorVector(
            tuple(c + rng.randint(0, 2) for c in vec.exc), vec.strict
        )
        assert cl <= antinef_closure(r, bigger)
        # order independent
        for _ in range(3):
            assert antinef_closure(r, vec, pick=rng.choice) == cl


# ---------------------------------------------------------------------------
# jump scan


def test_cusp_jump_set(cusp):
    rep = jumping_numbers(cusp)
    assert rep.jumping_values() == [F(7, 12), F(5, 6), F(11, 12), F(1)]
    assert rep.lct == F(7, 12)
    assert not rep.is_jumping(F(5, 8)) and not rep.is_jumping(F(7, 8))
    rel = {row.name: (row.relevant, row.witness) for row in rep.relevance}
    assert rel["E3"] == (True, F(11, 12))
    assert all(not rel[f"E{i}"][0] for i in range(3))


def test_two_cusps_jump_set(pair):
    rep = jumping_numbers(pair)
    assert rep.jumping_values() == [F(1, 2), F(7, 10), F(9, 10), F(1)]
    assert rep.lct == F(1, 2)
    rec = contribution_report(pair, F(1, 2))
    assert set(rec.critical) == {"E0", "E3", "E4"}
    assert rec.contributing == ()


def test_contribution_report_cusp(cusp):
    rec = contribution_report(cusp, F(11, 12))
    assert rec.critical == ("E3",) and rec.contributing == ("E3",)
    rec1 = contribution_report(cusp, F(1))
    assert set(rec1.critical) == {"E0", "E1", "E2", "E3", "C"}
    with pytest.raises(ValueError):
        contribution_report(cusp, F(5, 8))


def test_one_is_always_jumping(corpus):
    for r in corpus[:20]:
        assert jumping_numbers(r).is_jumping(F(1))


def test_contributed_numbers_do_jump(corpus):
    # individual contribution forces a jump of the ideal itself
    for r in corpus[:15]:
        rep = jumping_numbers(r)
        jumps = set(rep.jumping_values())
        for j in range(r.nexc()):
            for lam in candidates(r, j, 1):
                if contributes(r, j, lam):
                    assert lam in jumps


def test_critical_set_never_empty(corpus):
    for r in corpus[:15]:
        for rec in jumping_numbers(r).records:
            assert rec.critical


def test_irreducible_lct_from_first_exponents():
    # for a reduced irreducible germ the smallest jumping number is
    # 1/b0 + 1/b1, and the relevant divisors are exactly as many as the
    # characteristic pairs (the star points of the dual graph)
    from curvejump.branch import CharExponents
    from curvejump.cluster import build_diagram

    rng = random.Random(2024)
    from corpus import random_char_exponents

    checked = 0
    while checked < 25:
        c = random_char_exponents(rng, beta0_max=9)
        if c.is_smooth():
            continue
        r = resolve(build_diagram([(c, 1)]))
        rep = jumping_numbers(r)
        assert rep.lct == F(1, c.beta[0]) + F(1, c.beta[1])
        assert sum(1 for v in r.valence if v >= 3) == c.g
        checked += 1


def test_non_reduced_smooth_germ():
    # a double line jumps at the half-integers
    from curvejump.branch import CharExponents
    from curvejump.cluster import build_diagram

    r = resolve(build_diagram([(CharExponents((1,)), 2)]))
    assert jumping_numbers(r).jumping_values() == [F(1, 2), F(1)]


def test_smooth_curve_jumps_are_integers():
    # a germ already in normal crossing: empty exceptional set downstream
    from curvejump.cluster import DiagramBranch, EnriquesDiagram

    empty = EnriquesDiagram(points=(), branches=(DiagramBranch("C", 1, (), ()),))
    r = resolve(empty)
    rep = jumping_numbers(r, bound=3)
    assert rep.jumping_values() == [F(1), F(2), F(3)]
    # the one-point convention for a single smooth branch gives the same set
    from curvejump.branch import CharExponents
    from curvejump.cluster import build_diagram

    r1 = resolve(build_diagram([(CharExponents((1,)), 1)]))
    assert jumping_numbers(r1, bound=3).jumping_values() == [F(1), F(2), F(3)]


def test_skoda(cusp):
    rep = jumping_numbers(cusp)
    assert skoda_shift(rep, F(19, 12)) is True
    assert skoda_shift(rep, F(2)) is True
    assert skoda_shift(rep, F(13, 8)) is False
    with pytest.raises(ValueError):
        skoda_shift(rep, F(1, 2))


def test_scan_above_one_matches_periodicity(cusp):
    rep2 = jumping_numbers(cusp, bound=2)
    above = [v for v in rep2.jumping_values() if v > 1]
    assert above == [F(19, 12), F(11, 6), F(23, 12), F(2)]


def test_relevance_witness_guard(pair):
    # sanity for the internal invariant: every relevant divisor's witness
    # passes the criterion (a failure raises InvariantViolation inside)
    for j in range(pair.nexc()):
        ok, wit = relevant(pair, j)
        if ok:
            assert contributes(pair, j, wit)


def test_exhaustive_minimal_antinef_small():
    # on small lattices the closure is the componentwise-least antinef
    # vector dominating the input, verified by exhaustive search
    rng = random.Random(3)
    tested = 0
    for r in resolution_corpus(31, 60, beta0_max=4):
        n = r.nexc()
        if n > 4:
            continue
        vec = DivisorVector(
            tuple(rng.randint(0, 2) for _ in range(n)),
            tuple(rng.randint(0, 1) for _ in r.strict_names),
        )
        cl = antinef_closure(r, vec)
        if any(c > 6 for c in cl.exc):
            continue

        def antinef(exc):
            for j in range(n):
                dot = sum(
                    (exc[i] if i < n else vec.strict[i - n]) * e
                    for i, e in r.sparse[j]
                )
                if dot > 0:
                    return False
            return True

        best = None
        for exc in itertools.product(*(range(lo, 7) for lo in vec.exc)):
            if antinef(exc):
                if best is None:
                    best = list(exc)
                else:
                    best = [min(a, b) for a, b in zip(best, exc)]
        assert best is not None and tuple(best) == cl.exc
        tested += 1
    assert tested >= 10
