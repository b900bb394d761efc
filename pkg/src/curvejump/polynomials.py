r"""Sparse bivariate polynomials with exact coefficients.

Coefficients are Fractions, or elements of a simple-extension tower when
the Newton-Puiseux recursion has left the rationals.  Terms are held in a
dict mapping (i, j) exponent pairs to nonzero coefficients; instances are
immutable value objects.
"""

from fractions import Fraction


class BivarPoly:
    """A polynomial in x and y over an exact coefficient field."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        clean = {}
        for (i, j), c in terms.items():
            if c:
                clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def from_int(cls, n):
        return cls({(0, 0): Fraction(n)}) if n else cls({})

    @classmethod
    def monomial(cls, i, j, c=Fraction(1)):
        return cls({(i, j): c})

    def is_zero(self):
        return not self.terms

    def support(self):
        return set(self.terms)

    def __eq__(self, other):
        return isinstance(other, BivarPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return BivarPoly(out)

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                v = out.get(k)
                v = c1 * c2 if v is None else v + c1 * c2
                out[k] = v
        return BivarPoly(out)

    def scale(self, c):
        if not c:
            return BivarPoly({})
        return BivarPoly({k: v * c for k, v in self.terms.items()})

    def pow(self, n):
        out = BivarPoly({(0, 0): Fraction(1)})
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    # -- order data at the origin

    def value_at_origin(self):
        return self.terms.get((0, 0), Fraction(0))

    def order(self):
        """Total-degree order of vanishing at the origin."""
        if not self.terms:
            raise ValueError("the zero polynomial has no order")
        return min(i + j for i, j in self.terms)

    def x_order(self):
        return min(i for i, _ in self.terms) if self.terms else None

    def y_order(self):
        return min(j for _, j in self.terms) if self.terms else None

    def shift_down(self, dx, dy):
        """Divide by x^dx y^dy; exact by construction of the caller."""
        out = {}
        for (i, j), c in self.terms.items():
            if i < dx or j < dy:
                raise ValueError("monomial division is not exact")
            out[(i - dx, j - dy)] = c
        return BivarPoly(out)

    def swap_vars(self):
        return BivarPoly({(j, i): c for (i, j), c in self.terms.items()})

    def derivative_y(self):
        return BivarPoly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms):
            c = self.terms[(i, j)]
            mono = "".join(
                (f"x^{i}" if i > 1 else "x" if i == 1 else "",
                 f"y^{j}" if j > 1 else "y" if j == 1 else "")
            )
            parts.append(f"({c}){mono}" if mono else f"({c})")
        return " + ".join(parts)


def lower_edges(support):
    """Compact edges of the Newton polyhedron (hull of the support plus the
    positive quadrant), as (p, q, c, [points on the edge]) with p, q > 0
    coprime and the edge on p*i + q*j = c.  Sorted steepest first (branches
    tangent to the y-axis come out of the steep edges)."""
    from math import gcd

    pts = set(support)
    minimal = [
        (i, j)
        for (i, j) in pts
        if not any((u, v) != (i, j) and u <= i and v <= j for (u, v) in pts)
    ]
    minimal.sort()  # increasing i, hence strictly decreasing j
    hull = []
    for pt in minimal:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            cross = (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1)
            if cross <= 0:  # clockwise or collinear: the middle point is no vertex
                hull.pop()
            else:
                break
        hull.append(pt)
    edges = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        p, q = y1 - y2, x2 - x1
        g = gcd(p, q)
        p, q = p // g, q // g
        c = p * x1 + q * y1
        on_edge = sorted(pt for pt in pts if p * pt[0] + q * pt[1] == c)
        edges.append((p, q, c, on_edge))
    return edges
