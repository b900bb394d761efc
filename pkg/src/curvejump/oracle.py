r"""Independent verification channel: monomial multiplier ideals from the
Newton polygon of a nondegenerate polynomial.

For f nondegenerate with respect to its Newton polygon (no compact-edge
polynomial has a repeated root off the coordinate axes), the multiplier
ideals below coefficient 1 are monomial, and the monomial x^a y^b enters
exactly when the shifted lattice point (a+1, b+1) passes into the interior
of the scaled polyhedron.  The entry threshold of a monomial is therefore
the minimum of (p(a+1) + q(b+1))/c over the compact edges p x + q y = c,
together with (a+1)/xmin and (b+1)/ymin for the axis rays when the hull
sits off an axis.  The jumping numbers below 1 are exactly the thresholds
below 1, and thresholds grow with a and b, so a finite scan is complete.

This route never touches the resolution machinery: it is the brute-force
cross-check for the main engine, valid strictly below 1 (above 1 the
monomial description needs correction terms, and periodicity covers that
range instead).
"""

from dataclasses import dataclass
from fractions import Fraction

from .arith import QQ, UniPoly, poly_gcd
from .polynomials import BivarPoly, lower_edges


class DegenerateCurveError(ValueError):
    """The polynomial is degenerate for its Newton polygon; the monomial
    description of its multiplier ideals does not apply."""


@dataclass(frozen=True)
class NewtonPolygon:
    """Support and compact boundary of the Newton polyhedron of f."""

    support: frozenset
    edges: tuple  # (p, q, c) with p, q > 0 coprime; edge on p x + q y = c
    edge_points: tuple  # tuple of point tuples, parallel to edges
    xmin: int
    ymin: int


def polygon(f):
    """Newton polygon of a polynomial vanishing at the origin."""
    if isinstance(f, dict):
        f = BivarPoly(f)
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polygon")
    if f.value_at_origin():
        raise ValueError("f is a unit at the origin; no singularity to measure")
    edges = lower_edges(f.support())
    return NewtonPolygon(
        support=frozenset(f.support()),
        edges=tuple((p, q, c) for p, q, c, _ in edges),
        edge_points=tuple(tuple(pts) for _, _, _, pts in edges),
        xmin=min(i for i, _ in f.support()),
        ymin=min(j for _, j in f.support()),
    )


def edge_polynomial(f, edge_points):
    """Restriction of f to a compact edge, dehomogenized to one variable."""
    (i0, j0) = edge_points[0]
    if len(edge_points) == 1:
        return UniPoly(QQ, [f.terms[(i0, j0)]])
    step = edge_points[1][0] - edge_points[0][0]
    coeffs = {}
    for (i, j) in edge_points:
        coeffs[(i - i0) // step] = f.terms[(i, j)]
    return UniPoly(QQ, [coeffs.get(d, Fraction(0)) for d in range(max(coeffs) + 1)])


def nondegenerate(f):
    """No compact-edge polynomial has a repeated root away from the axes."""
    if isinstance(f, dict):
        f = BivarPoly(f)
    np_ = polygon(f)
    for pts in np_.edge_points:
        g = edge_polynomial(f, pts)
        if g.degree() >= 1 and poly_gcd(g, g.derivative()).degree() > 0:
            return False
    return True


def monomial_threshold(np_, a, b):
    """Supremum of the coefficients for which x^a y^b stays outside the
    multiplier ideal: min over compact edges and axis rays."""
    if a < 0 or b < 0:
        raise ValueError("monomial exponents must be non-negative")
    vals = [Fraction(p * (a + 1) + q * (b + 1), c) for (p, q, c) in np_.edges]
    if np_.xmin > 0:
        vals.append(Fraction(a + 1, np_.xmin))
    if np_.ymin > 0:
        vals.append(Fraction(b + 1, np_.ymin))
    return min(vals)


def oracle_jumping_numbers(f, bound):
    """Jumping numbers of a nondegenerate f up to ``bound`` < 1, as the set
    of monomial entry thresholds; monotonicity in (a, b) makes the scan
    finite and complete."""
    if isinstance(f, dict):
        f = BivarPoly(f)
    bound = Fraction(bound)
    if not 0 < bound < 1:
        raise ValueError("the oracle is only valid strictly below 1")
    if not nondegenerate(f):
        raise DegenerateCurveError(
            "f is degenerate for its Newton polygon; the oracle refuses it"
        )
    np_ = polygon(f)
    out = set()
    a = 0
    while monomial_threshold(np_, a, 0) <= bound:
        b = 0
        while True:
            t = monomial_threshold(np_, a, b)
            if t > bound:
                break
            out.add(t)
            b += 1
        a += 1
    return sorted(out)
