r"""Combinatorics of a single analytic plane branch.

A branch is described by its characteristic exponents (b0; b1, ..., bg):
b0 is the multiplicity and the gcds e_q = gcd(b0, ..., bq) drop strictly
from e_0 = b0 down to e_g = 1.  From these the module computes

* the multiplicity sequence of the infinitely near points the branch
  passes through in its minimal embedded resolution, together with each
  point's proximity kind (free, or satellite with its second target),
* the semigroup of values of the branch's divisorial valuation,
* pairwise intersection numbers via shared infinitely near points.

The workhorse is ``blowup_walk``: a subtractive-Euclid state machine on
the pair of coordinate orders of a parametrization.  At a point with
local coordinate orders (a, b), blowing up sends the branch

* towards the old second axis when b > a (a "lo" move),
* towards the old first axis when b < a (a "hi" move),
* to a free point determined by the coefficient of the series term being
  consumed when a == b (an "exit" move).

A new point is satellite exactly when the axis it lands on is an earlier
exceptional divisor; the walk tracks the two axis labels to decide this.
The same machine, run on raw parametrization orders, drives the contact
computations of the Newton-Puiseux frontend.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class BranchError(ValueError):
    """Malformed characteristic exponents or inconsistent branch data."""


@dataclass(frozen=True)
class CharExponents:
    """Characteristic exponents (b0; b1, ..., bg) of an analytic branch.

    beta[0] is the branch multiplicity.  A smooth branch is (1,) with g = 0.
    """

    beta: tuple

    def __post_init__(self):
        beta = tuple(int(b) for b in self.beta)
        object.__setattr__(self, "beta", beta)
        if not beta or any(b <= 0 for b in beta):
            raise BranchError("characteristic exponents must be positive integers")
        if any(b2 <= b1 for b1, b2 in zip(beta, beta[1:])):
            raise BranchError("characteristic exponents must increase strictly")
        e = beta[0]
        for b in beta[1:]:
            e2 = gcd(e, b)
            if e2 == e:
                raise BranchError(f"exponent {b} does not lower the gcd ladder")
            e = e2
        if e != 1:
            raise BranchError("gcd of the characteristic exponents must be 1")

    @property
    def beta0(self):
        return self.beta[0]

    @property
    def g(self):
        return len(self.beta) - 1

    def e(self, q):
        """e_q = gcd(b0, ..., bq)."""
        out = self.beta[0]
        for b in self.beta[1 : q + 1]:
            out = gcd(out, b)
        return out

    def n(self, q):
        """n_q = e_{q-1} / e_q for 1 <= q <= g."""
        return self.e(q - 1) // self.e(q)

    def is_smooth(self):
        return self.beta0 == 1

    def __str__(self):
        if self.g == 0:
            return f"({self.beta0};)"
        return f"({self.beta0};{','.join(str(b) for b in self.beta[1:])})"


@dataclass(frozen=True)
class SeqEntry:
    """One infinitely near point on a branch: multiplicity and proximity kind.

    ``extra`` is None for a free point; for a satellite it is the index,
    along this branch's own point list, of the second proximity target
    (the first target is always the previous point).
    """

    mult: int
    extra: object  # int | None

    @property
    def kind(self):
        return "satellite" if self.extra is not None else "free"


# ---------------------------------------------------------------------------
# the blowup walk


@dataclass(frozen=True)
class WalkStep:
    """One emitted point of the blowup walk.

    move:   'root' | 'lo' | 'hi' | 'exit'
    mult:   multiplicity of the branch at the point
    extra:  second proximity target (index into the walk's point list) or None
    state:  local coordinate orders (a, b) at the point; None encodes an
            identically vanishing coordinate (infinite order)
    exponent: for 'exit' moves, the x-exponent of the series term consumed
    """

    move: str
    mult: object
    extra: object
    state: tuple = None
    exponent: object = None


def blowup_walk(ord_x, terms, limit=1 << 16):
    """Generate the infinitely near points of a branch parametrized with
    first coordinate of parameter order ``ord_x`` and second-coordinate
    series support ``terms`` (strictly increasing positive parameter
    orders; may be empty).

    ord_x may be None for the branch {x = 0} itself (infinite order).
    Yields the root point first, then one WalkStep per blowup.  The stream
    is infinite in spirit (a resolved branch keeps crossing new divisors at
    free points); ``limit`` bounds runaway consumers.
    """
    INF = None  # order of an identically zero coordinate

    terms = list(terms)
    if any(t2 <= t1 for t1, t2 in zip(terms, terms[1:])) or any(t <= 0 for t in terms):
        raise BranchError("series support must be strictly increasing and positive")
    if ord_x is INF and not terms:
        raise BranchError("a branch must have one coordinate of finite order")
    a = ord_x
    idx = 0
    consumed = 0
    b = terms[0] if terms else INF
    la = None  # axis labels: index of the point whose divisor the axis is, or None
    lb = None
    cur = 0  # index of the point about to be blown up

    def residual():
        return INF if b is INF else b - consumed

    def mult():
        bb = residual()
        if a is INF:
            return bb
        if bb is INF:
            return a
        return min(a, bb)

    yield WalkStep("root", mult(), None, (a, residual()))
    for _ in range(limit):
        bb = residual()
        if a is not INF and (bb is INF or a < bb):
            # 'lo': new point on the new divisor and the strict second axis
            move, extra = "lo", lb
            exponent = None
            consumed += a
            la = cur
        elif bb is not INF and (a is INF or bb < a):
            # 'hi': new point on the new divisor and the strict first axis
            move, extra = "hi", la
            exponent = None
            if a is not INF:
                a -= bb
            lb = cur
        else:
            # a == bb: consume the series term; free exit towards its coefficient
            move, extra = "exit", None
            exponent = Fraction(terms[idx], ord_x)
            consumed = terms[idx]
            idx += 1
            b = terms[idx] if idx < len(terms) else INF
            la, lb = cur, None
        cur += 1
        yield WalkStep(move, mult(), extra, (a, residual()), exponent)
    raise BranchError("blowup walk exceeded its step limit")


def _walk_sequence(ord_x, terms):
    """Own multiplicity sequence of a branch from raw parametrization orders.

    The sequence stops at the first point with both local coordinate orders
    equal to 1 (from there on the total transform is simple normal crossing
    around the branch); a smooth branch contributes its root point only.
    """
    gen = blowup_walk(ord_x, terms)
    root = next(gen)
    entries = [SeqEntry(root.mult, None)]
    if root.mult == 1:
        return entries
    for step in gen:
        entries.append(SeqEntry(step.mult, step.extra))
        if step.state == (1, 1):
            break
    return entries


def multiplicity_sequence(c):
    """Multiplicity sequence with proximity kinds of the branch's minimal
    embedded resolution.

    The sequence includes the trailing multiplicity-1 points needed to make
    the total transform simple normal crossing, as produced by the full
    Euclidean algorithm on the characteristic exponents: (2;3) uses three
    points, (3;4) four.
    """
    if not isinstance(c, CharExponents):
        c = CharExponents(tuple(c))
    if c.is_smooth():
        return [SeqEntry(1, None)]
    return _walk_sequence(c.beta0, list(c.beta[1:]))


def characteristic_exponents_from_multiplicities(mults):
    """Reconstruct the characteristic exponents from a multiplicity sequence.

    Inverse of :func:`multiplicity_sequence` (kinds are determined by the
    multiplicities, so they are not needed).  Raises BranchError when no
    branch has the given sequence.
    """
    mults = [int(m) for m in mults]
    if not mults or any(m <= 0 for m in mults):
        raise BranchError("multiplicities must be positive")
    if mults[0] == 1:
        if any(m != 1 for m in mults):
            raise BranchError("a smooth branch has all multiplicities 1")
        return CharExponents((1,))

    def rec(e, acc_beta, rest):
        # try every stage length; a stage is a subtractive-Euclid block on
        # (e, e + delta) whose recorded minima must match the block exactly
        if not rest:
            return acc_beta if e == 1 else None
        if e == 1:
            return acc_beta if all(m == 1 for m in rest) else None
        for k in range(1, len(rest) + 1):
            block = rest[:k]
            eq = block[-1]
            delta = sum(block) - e + eq
            if delta <= 0 or gcd(e, delta) != eq or eq >= e:
                continue
            beta_prev = acc_beta[-1]
            sim = [s.mult for s in _stage_block(e, delta)]
            if sim != block:
                continue
            out = rec(eq, acc_beta + [beta_prev + delta], rest[k:])
            if out is not None:
                return out
        return None

    res = rec(mults[0], [mults[0]], mults[1:])
    if res is None:
        raise BranchError(f"no branch has multiplicity sequence {mults}")
    return CharExponents(tuple(res))


def _stage_block(e, delta):
    """Multiplicities recorded by one Euclid stage, i.e. the subtractive walk
    on the pair (e, e + delta) with the stage's opening state excluded."""
    out = []
    a, b = e, e + delta
    while True:
        if b > a:
            b -= a
        else:
            a -= b
        out.append(SeqEntry(min(a, b), None))
        if a == b:
            break
    return out


# ---------------------------------------------------------------------------
# semigroup and intersections


@dataclass(frozen=True)
class Semigroup:
    """Minimal generators of the value semigroup of a branch."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        acc = 0
        for g in gens:
            acc = gcd(acc, g)
        if acc != 1:
            raise BranchError("semigroup generators must have gcd 1")

    def contains(self, n, _cache={}):
        """Membership test by bounded coin-change."""
        if n < 0:
            return False
        if n == 0:
            return True
        key = (self.generators, n)
        if key not in _cache:
            _cache[key] = any(self.contains(n - g) for g in self.generators if g <= n)
        return _cache[key]

    def __str__(self):
        return "<" + ",".join(str(g) for g in self.generators) + ">"


def semigroup(c):
    """Value semigroup generators of a branch from its characteristic exponents.

    bbar_0 = b0, bbar_1 = b1, and bbar_{q+1} = n_q bbar_q + b_{q+1} - b_q
    with n_q = e_{q-1}/e_q.
    """
    if not isinstance(c, CharExponents):
        c = CharExponents(tuple(c))
    if c.g == 0:
        return Semigroup((1,))
    gens = [c.beta0, c.beta[1]]
    for q in range(1, c.g):
        gens.append(c.n(q) * gens[-1] + c.beta[q + 1] - c.beta[q])
    return Semigroup(tuple(gens))


def extended_mults(c, length):
    """Branch multiplicities along its first ``length`` infinitely near points,
    continuing with 1s once its own resolution is finished."""
    seq = multiplicity_sequence(c)
    out = [e.mult for e in seq[:length]]
    out.extend([1] * (length - len(out)))
    return out


def extended_kinds(c, length):
    """Second proximity targets along the first ``length`` points (None = free)."""
    seq = multiplicity_sequence(c)
    out = [e.extra for e in seq[:length]]
    out.extend([None] * (length - len(out)))
    return out


def branch_intersection(a, b, shared):
    """Intersection number of two branches sharing the given number of
    infinitely near points (Noether: sum of products of multiplicities).

    Points past a branch's own sequence are free of multiplicity 1; a shared
    prefix must have compatible proximity structure, otherwise no pair of
    curves realizes the data and BranchError is raised.
    """
    shared = int(shared)
    if shared < 1:
        raise BranchError("two branches at the same point share at least the root")
    ka = extended_kinds(a, shared + 1)
    kb = extended_kinds(b, shared + 1)
    if ka[:shared] != kb[:shared]:
        pos = next(i for i in range(shared) if ka[i] != kb[i])
        raise BranchError(
            f"incompatible proximity structure at shared point {pos}: "
            f"{ka[pos]!r} vs {kb[pos]!r}"
        )
    if ka[shared] is not None and ka[shared] == kb[shared]:
        raise BranchError(
            f"the branches cannot separate after {shared} points: both continue "
            f"through the same forced satellite position"
        )
    ma = extended_mults(a, shared)
    mb = extended_mults(b, shared)
    return sum(x * y for x, y in zip(ma, mb))
