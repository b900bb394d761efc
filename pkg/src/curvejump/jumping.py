r"""Jumping numbers of a plane curve germ and the divisors contributing them.

Ideals cut out on the resolution are handled through exceptional divisor
vectors.  The multiplier ideal at coefficient t is the pushforward of
O(K - floor(t * pullback)), encoded by the vector

    exceptional part:  max(0, floor(t * a_i) - k_i)
    strict part:       floor(t * m_b)  per branch,

and "just below t" is realized exactly by the rounding F(x) = x - 1 at
integers, floor(x) otherwise: the rounded vector is a step function of t,
constant on half-open intervals, so no numeric epsilon is ever chosen.

Two such vectors cut the same ideal exactly when their antinef closures
agree (complete ideals on a smooth surface germ correspond to antinef
divisors); the closure is computed by unloading: repeatedly bump the
coefficient of any divisor with positive intersection against the vector
by the ceiling of the violation over its negative self-intersection.  The
result is order-independent, which the tests assert rather than assume.

A jumping number is a t in the candidate grid where the closure steps; a
divisor individually contributes t when minus the rounded pullback meets
it at least twice (the degree criterion on the divisor, a rational curve);
a divisor is relevant exactly when its valence in the reduced total
transform is at least 3, and then it contributes 1 - 1/a already.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from .arith import floor_scale
from .cluster import InvariantViolation


@dataclass(frozen=True)
class DivisorVector:
    """Integer coefficients over the components of a fixed resolution:
    one entry per exceptional divisor, one per strict branch component."""

    exc: tuple
    strict: tuple

    def __le__(self, other):
        return (
            self.strict == other.strict
            and len(self.exc) == len(other.exc)
            and all(a <= b for a, b in zip(self.exc, other.exc))
        )


@dataclass(frozen=True)
class JumpRecord:
    """One jumping number with its critical and contributing divisors."""

    value: Fraction
    critical: tuple  # component names with integral multiplicity there
    contributing: tuple  # exceptional divisors passing the criterion alone

    def to_dict(self):
        return {
            "lambda": _rat(self.value),
            "critical": list(self.critical),
            "contributing": list(self.contributing),
        }


@dataclass(frozen=True)
class RelevanceRow:
    name: str
    valence: int
    relevant: bool
    witness: object  # Fraction | None

    def to_dict(self):
        return {
            "divisor": self.name,
            "valence": self.valence,
            "relevant": self.relevant,
            "witness": _rat(self.witness) if self.witness is not None else None,
        }


@dataclass(frozen=True)
class JumpReport:
    records: tuple
    lct: object  # Fraction | None
    relevance: tuple
    bound: Fraction

    def jumping_values(self):
        return [rec.value for rec in self.records]

    def is_jumping(self, value):
        value = Fraction(value)
        return any(rec.value == value for rec in self.records)

    def to_dict(self):
        return {
            "bound": _rat(self.bound),
            "lct": _rat(self.lct) if self.lct is not None else None,
            "jumping_numbers": [rec.to_dict() for rec in self.records],
            "relevance": [row.to_dict() for row in self.relevance],
        }


def _rat(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


# ---------------------------------------------------------------------------
# candidates and the contribution criterion


def candidates(r, j, bound):
    """Candidate jumping numbers (k_j + n)/a_j, n >= 1, up to ``bound``."""
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    a, k = r.a_exc[j], r.k_exc[j]
    out = []
    n = 1
    while Fraction(k + n, a) <= bound:
        out.append(Fraction(k + n, a))
        n += 1
    return out


def is_candidate(r, j, lam):
    lam = Fraction(lam)
    t = lam * r.a_exc[j]
    return t.denominator == 1 and t >= r.k_exc[j] + 1


def _floor_pullback_dot(r, lam, j):
    """(floor of lam times the total transform) . E_j, exactly."""
    lam = Fraction(lam)
    num, den = lam.numerator, lam.denominator
    n = r.nexc()
    total = 0
    for i, entry in r.sparse[j]:
        a = r.a_exc[i] if i < n else r.a_strict[i - n]
        total += (num * a // den) * entry
    return total


def contributes(r, j, lam):
    """Does E_j individually contribute the candidate lam?

    True exactly when -(floor(lam * pullback) . E_j) >= 2; rejects lam that
    is not a candidate for E_j rather than evaluating the criterion anyway.
    """
    lam = Fraction(lam)
    if not is_candidate(r, j, lam):
        raise ValueError(
            f"{_rat(lam)} is not a candidate jumping number for E{j} "
            f"(a={r.a_exc[j]}, k={r.k_exc[j]})"
        )
    return -_floor_pullback_dot(r, lam, j) >= 2


def relevant(r, j):
    """(is E_j relevant, witnessed contributed number or None).

    A divisor is relevant exactly when its valence is at least 3; the
    witness 1 - 1/a_j is then verified to pass the criterion (a failure
    would be an internal invariant violation, never expected).
    """
    if r.valence[j] < 3:
        return False, None
    witness = 1 - Fraction(1, r.a_exc[j])
    if not contributes(r, j, witness):
        raise InvariantViolation(
            f"E{j} has valence {r.valence[j]} >= 3 but 1 - 1/a = {_rat(witness)} "
            f"fails the contribution criterion"
        )
    return True, witness


# ---------------------------------------------------------------------------
# multiplier ideal vectors and unloading


def multiplier_vector(r, lam, side="at"):
    """Divisor vector of the multiplier ideal at lam ('at') or just below
    ('left-limit')."""
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("the coefficient must be positive")
    if side == "at":
        F = floor_scale
    elif side in ("left-limit", "left"):

        def F(l, a):
            t = Fraction(l) * a
            return t.numerator - 1 if t.denominator == 1 else math.floor(t)

    else:
        raise ValueError(f"unknown side {side!r}")
    exc = tuple(max(0, F(lam, a) - k) for a, k in zip(r.a_exc, r.k_exc))
    strict = tuple(F(lam, m) for m in r.a_strict)
    return DivisorVector(exc=exc, strict=strict)


def antinef_closure(r, vec, pick=None, max_steps=None):
    """Minimal antinef vector dominating ``vec`` on the exceptional part.

    Unloading: while some exceptional E_j meets the vector positively,
    raise that coefficient by ceil(violation / -E_j^2).  The strict part is
    fixed data and participates in the intersection products.  The result
    does not depend on the order in which violating divisors are picked;
    ``pick`` (a callable choosing from the violating indices) lets tests
    exercise that.
    """
    n = r.nexc()
    exc = list(vec.exc)
    if len(exc) != n or len(vec.strict) != len(r.a_strict):
        raise ValueError("vector does not match the resolution's components")
    if any(c < 0 for c in exc):
        raise ValueError("exceptional coefficients must be non-negative")
    if max_steps is None:
        max_steps = 1000 * (n + 1) + 10 * sum(r.a_exc) * (
            1 + max(exc, default=0) + max(vec.strict, default=0)
        )

    def full(i):
        return exc[i] if i < n else vec.strict[i - n]

    dots = [sum(full(i) * entry for i, entry in r.sparse[j]) for j in range(n)]
    for _ in range(max_steps):
        violating = [j for j in range(n) if dots[j] > 0]
        if not violating:
            return DivisorVector(exc=tuple(exc), strict=tuple(vec.strict))
        j = violating[0] if pick is None else pick(violating)
        step = -(-dots[j] // (-r.matrix[j][j]))  # ceil division
        exc[j] += step
        for i, entry in r.sparse[j]:
            if i < n:
                dots[i] += step * entry
    raise InvariantViolation("unloading failed to terminate")


# ---------------------------------------------------------------------------
# the jump scan


def _candidate_grid(r, bound):
    bound = Fraction(bound)
    grid = set()
    for a in list(r.a_exc) + list(r.a_strict):
        t = 1
        while Fraction(t, a) <= bound:
            grid.add(Fraction(t, a))
            t += 1
    return sorted(grid)


def _record_at(r, lam):
    n = r.nexc()
    names = r.names()
    critical = []
    contributing = []
    for i in range(n):
        if (lam * r.a_exc[i]).denominator == 1:
            critical.append(names[i])
            if is_candidate(r, i, lam) and contributes(r, i, lam):
                contributing.append(names[i])
    for bi, m in enumerate(r.a_strict):
        if (lam * m).denominator == 1:
            critical.append(names[n + bi])
    return JumpRecord(value=lam, critical=tuple(critical), contributing=tuple(contributing))


def jumping_numbers(r, bound=1):
    """All jumping numbers in (0, bound] with critical/contributing data and
    the relevance table.

    Scans the candidate grid (integral multiples of 1/a_i and 1/m_b); at
    each grid value the ideal jumps exactly when the antinef closure of the
    multiplier vector differs from the closure just below, or a strict
    coefficient steps.
    """
    bound = Fraction(bound)
    records = []
    for lam in _candidate_grid(r, bound):
        at = antinef_closure(r, multiplier_vector(r, lam, "at"))
        left = antinef_closure(r, multiplier_vector(r, lam, "left-limit"))
        if at != left:
            records.append(_record_at(r, lam))
    rel = []
    for j in range(r.nexc()):
        ok, witness = relevant(r, j)
        rel.append(RelevanceRow(r.exc_names[j], r.valence[j], ok, witness))
    lct = records[0].value if records else None
    report = JumpReport(records=tuple(records), lct=lct, relevance=tuple(rel), bound=bound)
    if bound >= 1 and not report.is_jumping(Fraction(1)):
        raise InvariantViolation("1 is always a jumping number but was not detected")
    return report


def is_jumping(r, lam):
    """Direct test of a single value (closure at lam vs just below)."""
    lam = Fraction(lam)
    at = antinef_closure(r, multiplier_vector(r, lam, "at"))
    left = antinef_closure(r, multiplier_vector(r, lam, "left-limit"))
    return at != left


def contribution_report(r, lam):
    """Critical and individually-contributing divisors at a jumping number."""
    lam = Fraction(lam)
    if not is_jumping(r, lam):
        raise ValueError(f"{_rat(lam)} is not a jumping number of this germ")
    return _record_at(r, lam)


def skoda_shift(report, lam):
    """Periodicity: for lam > 1, lam is jumping iff lam - 1 is jumping or
    lam is an integer.  Reduces into the report's range (0, 1]."""
    lam = Fraction(lam)
    if lam <= 1:
        raise ValueError("skoda_shift applies to values above 1")
    if report.bound < 1:
        raise ValueError("periodicity needs a report covering (0, 1]")
    if lam.denominator == 1:
        return True
    frac = lam - math.floor(lam)
    return report.is_jumping(frac)
