"""Branch combinatorics: multiplicity sequences, semigroups, intersections."""

import random
from fractions import Fraction

import pytest

from curvejump.branch import (
    BranchError,
    CharExponents,
    Semigroup,
    branch_intersection,
    characteristic_exponents_from_multiplicities,
    extended_kinds,
    multiplicity_sequence,
    semigroup,
)

from corpus import random_char_exponents


def seq_pairs(c):
    return [(e.mult, e.extra) for e in multiplicity_sequence(c)]


# ---------------------------------------------------------------------------
# characteristic exponents


@pytest.mark.parametrize(
    "beta",
    [(0,), (2,), (3, 3), (4, 6, 8), (2, 3, 5), (1, 2)],
)
def test_invalid_exponents(beta):
    with pytest.raises(BranchError):
        CharExponents(beta)


def test_gcd_ladder():
    c = CharExponents((4, 6, 7))
    assert (c.e(0), c.e(1), c.e(2)) == (4, 2, 1)
    assert (c.n(1), c.n(2)) == (2, 2)
    assert c.g == 2 and not c.is_smooth()
    assert CharExponents((1,)).is_smooth()


# ---------------------------------------------------------------------------
# multiplicity sequences


def test_sequence_cusp34():
    # four blowups: the satellite chain rides the first divisor
    assert seq_pairs(CharExponents((3, 4))) == [(3, None), (1, None), (1, 0), (1, 0)]


def test_sequence_cusp23():
    assert seq_pairs(CharExponents((2, 3))) == [(2, None), (1, None), (1, 0)]


def test_sequence_smooth():
    assert seq_pairs(CharExponents((1,))) == [(1, None)]


def test_sequence_two_pairs():
    assert seq_pairs(CharExponents((4, 6, 7))) == [
        (4, None),
        (2, None),
        (2, 0),
        (1, None),
        (1, 2),
    ]


@pytest.mark.parametrize("seed", range(40))
def test_proximity_equality_along_branch(seed):
    # within one branch the multiplicity at each non-terminal point equals
    # the sum over the points proximate to it
    c = random_char_exponents(random.Random(seed))
    seq = multiplicity_sequence(c)
    for i, entry in enumerate(seq):
        proximate = [
            e.mult
            for j, e in enumerate(seq)
            if j > i and (j == i + 1 or e.extra == i)
        ]
        if i < len(seq) - 1:
            assert entry.mult == sum(proximate)
        else:
            assert entry.mult == 1 >= sum(proximate)


@pytest.mark.parametrize("seed", range(40))
def test_pair_count_matches_block_structure(seed):
    # g equals one plus the number of free points directly after a satellite
    c = random_char_exponents(random.Random(seed + 1000))
    seq = multiplicity_sequence(c)
    if c.g == 0:
        assert len(seq) == 1
        return
    restarts = sum(
        1
        for i in range(1, len(seq))
        if seq[i].extra is None and seq[i - 1].extra is not None
    )
    assert c.g == restarts + 1


@pytest.mark.parametrize("seed", range(30))
def test_inverse_euclid_roundtrip(seed):
    c = random_char_exponents(random.Random(seed + 500))
    mults = [e.mult for e in multiplicity_sequence(c)]
    assert characteristic_exponents_from_multiplicities(mults) == c


def test_delta_invariant_consistency():
    # sum m(m-1)/2 over the sequence equals the number of semigroup gaps:
    # two independent routes to the delta invariant
    for beta in [(2, 3), (3, 4), (2, 5), (4, 6, 7), (4, 6, 9), (6, 9, 22), (5, 7)]:
        c = CharExponents(beta)
        d1 = sum(e.mult * (e.mult - 1) for e in multiplicity_sequence(c)) // 2
        sg = semigroup(c)
        bound = 2 * max(sg.generators) ** 2 + 2
        d2 = sum(1 for n in range(1, bound) if not sg.contains(n))
        assert d1 == d2


# ---------------------------------------------------------------------------
# semigroups


def brute_force_semigroup(c, order_bound):
    """Orders of vanishing of polynomials along a parametrization realizing c,
    by Gaussian elimination on truncated parameter series of the monomials.

    The parametrization x = u^{b0}, y = sum_i u^{b_i} realizes the exponents;
    the attained orders of the whole polynomial ring are the leading orders
    of a triangular basis of the series the monomials span.
    """
    if c.g == 0:
        return list(range(0, order_bound + 1))
    b0 = c.beta0

    def series_y():
        return {b: Fraction(1) for b in c.beta[1:]}

    def mul(u, v):
        out = {}
        for du, cu in u.items():
            for dv, cv in v.items():
                if du + dv <= order_bound:
                    out[du + dv] = out.get(du + dv, Fraction(0)) + cu * cv
        return {d: x for d, x in out.items() if x}

    basis = {}  # leading order -> series (dict), reduced
    orders = set()
    ypows = [{0: Fraction(1)}]
    for _ in range(order_bound // min(c.beta[1:]) + 1):
        ypows.append(mul(ypows[-1], series_y()))
    for j, yp in enumerate(ypows):
        i = 0
        while b0 * i + (min(yp) if yp else 0) <= order_bound:
            ser = {d + b0 * i: co for d, co in yp.items() if d + b0 * i <= order_bound}
            while ser:
                lead = min(ser)
                if lead not in basis:
                    basis[lead] = ser
                    orders.add(lead)
                    break
                other = basis[lead]
                scale = ser[lead] / other[lead]
                new = dict(ser)
                for d, co in other.items():
                    new[d] = new.get(d, Fraction(0)) - scale * co
                ser = {d: co for d, co in new.items() if co}
            i += 1
    orders.add(0)
    return sorted(o for o in orders if o <= order_bound)


def minimal_generators(values):
    """Minimal generating set of the numerical semigroup with the given
    attained values (complete up to their maximum)."""
    gens = []

    def representable(n):
        if n == 0:
            return True
        return any(g <= n and representable(n - g) for g in gens)

    for v in sorted(v for v in values if v > 0):
        if not representable(v):
            gens.append(v)
    return tuple(gens)


@pytest.mark.parametrize(
    "beta,expect",
    [((3, 4), (3, 4)), ((4, 6, 7), (4, 6, 13)), ((1,), (1,)), ((4, 6, 9), (4, 6, 15))],
)
def test_semigroup_formula(beta, expect):
    assert semigroup(CharExponents(beta)).generators == expect


@pytest.mark.parametrize("beta", [(3, 4), (4, 6, 7), (2, 5), (4, 6, 9), (6, 8, 9)])
def test_semigroup_against_brute_force(beta):
    c = CharExponents(beta)
    sg = semigroup(c)
    bound = 2 * max(sg.generators) + max(sg.generators) ** 2 // min(sg.generators)
    attained = brute_force_semigroup(c, bound)
    assert minimal_generators(attained) == sg.generators


@pytest.mark.parametrize("seed", range(25))
def test_generators_non_redundant(seed):
    c = random_char_exponents(random.Random(seed + 77))
    gens = semigroup(c).generators
    for drop in range(len(gens)):
        rest = gens[:drop] + gens[drop + 1 :]
        if not rest:
            continue
        sub = Semigroup(rest) if _gcd_all(rest) == 1 else None
        if sub is not None:
            assert not sub.contains(gens[drop])
        else:
            # dropping the generator changes the gcd, so it surely is
            # not redundant
            pass


def _gcd_all(nums):
    from math import gcd

    out = 0
    for n in nums:
        out = gcd(out, n)
    return out


# ---------------------------------------------------------------------------
# intersections


def test_intersection_examples():
    assert branch_intersection(CharExponents((2, 3)), CharExponents((2, 3)), 1) == 4
    assert branch_intersection(CharExponents((1,)), CharExponents((1,)), 1) == 1
    assert branch_intersection(CharExponents((1,)), CharExponents((1,)), 2) == 2


def test_intersection_symmetric():
    a, b = CharExponents((2, 3)), CharExponents((3, 4))
    # sharing exactly 2 points is impossible here (the third is a forced
    # satellite for both); 1 and 3 are the realizable counts
    for shared in (1, 3):
        assert branch_intersection(a, b, shared) == branch_intersection(b, a, shared)
    assert branch_intersection(a, b, 3) == 3 * 2 + 1 + 1


def test_intersection_rejects_impossible_sharing():
    # a smooth branch cannot pass through the cusp's satellite point
    with pytest.raises(BranchError):
        branch_intersection(CharExponents((2, 3)), CharExponents((1,)), 3)
    # two ordinary cusps cannot part right before their shared forced satellite
    with pytest.raises(BranchError):
        branch_intersection(CharExponents((2, 3)), CharExponents((2, 3)), 2)


def test_kind_extension_is_free():
    ks = extended_kinds(CharExponents((2, 3)), 6)
    assert ks == [None, None, 0, None, None, None]
