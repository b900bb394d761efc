r"""Exact arithmetic kernel: rationals, univariate polynomials, simple extensions.

Every quantity in this package is exact.  Rational numbers are
``fractions.Fraction`` (always in lowest terms with positive denominator,
so equality is structural).  Univariate polynomials carry their coefficient
field explicitly; the field is either ``QQ`` (the rationals) or a
``SimpleExtension`` tower built on top of it.

Factorization over the rationals is delegated to sympy.  Factorization over
a simple extension K(a) is Trager's reduction: shift the polynomial by
multiples of the generator until its norm down to the base field is
squarefree, factor the norm there, and pull the factors back up with gcds.
The norm is a resultant, computed as a fraction-free (Bareiss) Sylvester
determinant, so the whole route stays exact and embedding-free.
"""

from fractions import Fraction
import math

import sympy


class ExtensionDepthError(ValueError):
    """Raised when building an extension tower deeper than the configured limit."""


def floor_scale(lam, a):
    """Return floor(lam * a) exactly, for a rational lam and an integer a >= 0."""
    if a < 0:
        raise ValueError("floor_scale requires a >= 0")
    return math.floor(Fraction(lam) * a)


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """The field of rational numbers, as a coefficient-field object."""

    depth = 0
    base = None

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, ExtElement):
            if v.is_constant():
                return v.constant_value()
            raise TypeError("cannot coerce a non-constant extension element to QQ")
        raise TypeError(f"cannot coerce {v!r} into QQ")

    def contains(self, v):
        return isinstance(v, (int, Fraction))

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class SimpleExtension:
    """A simple algebraic extension base(a) with a a root of an irreducible modulus.

    Elements are residues modulo the minimal polynomial, held as coefficient
    tuples of degree < deg(modulus) over the base field.  Towers are allowed
    (the base may itself be a SimpleExtension) up to ``depth_limit`` levels;
    exceeding the limit raises ExtensionDepthError instead of approximating.
    """

    def __init__(self, base, modulus, name="a", depth_limit=2):
        if modulus.field is not base:
            raise ValueError("modulus must live over the base field")
        if modulus.degree() < 2:
            raise ValueError("a simple extension needs a modulus of degree >= 2")
        depth = base.depth + 1
        if depth > depth_limit:
            raise ExtensionDepthError(
                f"extension tower of depth {depth} exceeds the limit {depth_limit}; "
                f"needed extension by {modulus}"
            )
        self.base = base
        self.modulus = modulus.monic()
        self.name = name
        self.depth = depth
        self.degree = self.modulus.degree()

    @property
    def zero(self):
        return ExtElement(self, ())

    @property
    def one(self):
        return ExtElement(self, (self.base.one,))

    @property
    def gen(self):
        return ExtElement(self, (self.base.zero, self.base.one))

    def coerce(self, v):
        if isinstance(v, ExtElement) and v.ext is self:
            return v
        # anything the base can absorb becomes a constant of this extension
        return ExtElement(self, (self.base.coerce(v),))

    def contains(self, v):
        return isinstance(v, ExtElement) and v.ext is self

    def reduce(self, coeffs):
        """Canonical residue of a coefficient sequence (low degree first)."""
        poly = UniPoly(self.base, coeffs)
        _, r = poly.divmod(self.modulus)
        return ExtElement(self, r.coeffs)

    def __repr__(self):
        return f"{self.base!r}({self.name})"


class ExtElement:
    """A residue in a SimpleExtension, canonical of degree < deg(modulus)."""

    __slots__ = ("ext", "rep")

    def __init__(self, ext, rep):
        rep = list(rep)
        while rep and not rep[-1]:
            rep.pop()
        self.ext = ext
        self.rep = tuple(rep)

    # -- structure

    def is_constant(self):
        if len(self.rep) > 1:
            return False
        c = self.rep[0] if self.rep else self.ext.base.zero
        return not isinstance(c, ExtElement) or c.is_constant()

    def constant_value(self):
        """The element as a Fraction, when it lies in the prime field."""
        if not self.rep:
            return Fraction(0)
        if len(self.rep) > 1:
            raise ValueError("not a constant")
        c = self.rep[0]
        return c.constant_value() if isinstance(c, ExtElement) else Fraction(c)

    def _coerce_other(self, other):
        if isinstance(other, ExtElement) and other.ext is self.ext:
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, ExtElement):
            return self.ext.coerce(other)
        return None

    # -- ring operations

    def __bool__(self):
        return bool(self.rep)

    def __eq__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self):
        return hash((id(self.ext), self.rep))

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        n = max(len(self.rep), len(o.rep))
        z = self.ext.base.zero
        a = list(self.rep) + [z] * (n - len(self.rep))
        b = list(o.rep) + [z] * (n - len(o.rep))
        return ExtElement(self.ext, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(self.ext, [-c for c in self.rep])

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        if not self.rep or not o.rep:
            return self.ext.zero
        z = self.ext.base.zero
        prod = [z] * (len(self.rep) + len(o.rep) - 1)
        for i, a in enumerate(self.rep):
            if not a:
                continue
            for j, b in enumerate(o.rep):
                prod[i + j] = prod[i + j] + a * b
        return self.ext.reduce(prod)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self.rep:
            raise ZeroDivisionError("zero is not invertible in the extension")
        p = UniPoly(self.ext.base, self.rep)
        g, s, _ = _xgcd(p, self.ext.modulus)
        if g.degree() != 0:
            # modulus not irreducible over the base; the caller violated the contract
            raise ZeroDivisionError("element is a zero divisor: modulus is reducible")
        inv = s.scale(_field_inv(g.coeffs[0]))
        return self.ext.reduce(inv.coeffs)

    def __truediv__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ext.one
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def __repr__(self):
        name = self.ext.name
        if not self.rep:
            return "0"
        parts = []
        for i, c in enumerate(self.rep):
            if not c:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"({c})*{name}")
            else:
                parts.append(f"({c})*{name}^{i}")
        return " + ".join(parts)


def _field_inv(c):
    if isinstance(c, ExtElement):
        return c.inverse()
    return Fraction(1) / Fraction(c)


def ext_reduce(expr, ext):
    """Canonical residue of an element expression in a simple extension.

    ``expr`` may be an ExtElement, a base-field value, or a coefficient
    sequence / UniPoly in the generator; the result has degree strictly
    below the modulus degree.
    """
    if isinstance(expr, ExtElement) and expr.ext is ext:
        return expr
    if isinstance(expr, UniPoly):
        return ext.reduce(expr.coeffs)
    if isinstance(expr, (list, tuple)):
        return ext.reduce(expr)
    return ext.coerce(expr)


# ---------------------------------------------------------------------------
# univariate polynomials over a field


class UniPoly:
    """Dense univariate polynomial over QQ or a SimpleExtension.

    Coefficients are stored low degree first with a nonzero leading
    coefficient (the zero polynomial has no coefficients).  Instances are
    immutable and hashable; all operations are pure.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = [field.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors

    @classmethod
    def const(cls, field, c):
        return cls(field, [c])

    @classmethod
    def gen(cls, field):
        return cls(field, [field.zero, field.one])

    # -- structure

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return UniPoly(self.field, [x + y for x, y in zip(a, b)])

    def __neg__(self):
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPoly(self.field, [])
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out)

    def scale(self, c):
        c = self.field.coerce(c)
        return UniPoly(self.field, [a * c for a in self.coeffs])

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.field is not self.field:
                raise TypeError("polynomials over different fields")
            return other
        return UniPoly.const(self.field, other)

    def divmod(self, other):
        """Quotient and remainder; the divisor's leading coefficient must be a unit."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        d = other.degree()
        if self.degree() < d:
            return UniPoly(self.field, []), self
        lead_inv = _field_inv(other.leading())
        rem = list(self.coeffs)
        quo = [self.field.zero] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c:
                c = c * lead_inv
                quo[k - d] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - d + j] = rem[k - d + j] - c * b
        return UniPoly(self.field, quo), UniPoly(self.field, rem[:d])

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(_field_inv(self.leading()))

    def derivative(self):
        return UniPoly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, c):
        """The polynomial p(x + c)."""
        out = UniPoly(self.field, [])
        for coeff in reversed(self.coeffs):
            out = out * UniPoly(self.field, [c, self.field.one]) + coeff
        return out

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({c})*t^{i}" if i else f"({c})")
        return "UniPoly(" + " + ".join(terms) + ")"


def _xgcd(a, b):
    """Extended gcd of univariate polynomials over a field (g monic not enforced)."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = UniPoly.const(f, f.one), UniPoly(f, [])
    t0, t1 = UniPoly(f, []), UniPoly.const(f, f.one)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def poly_gcd(a, b):
    """Monic gcd of two univariate polynomials over a field."""
    r0, r1 = a, b
    while not r1.is_zero():
        _, r = r0.divmod(r1)
        r0, r1 = r1, r
    return r0.monic() if not r0.is_zero() else r0


def squarefree_part(p):
    """Squarefree decomposition [(factor, multiplicity), ...] by Yun's algorithm.

    The product of factor^multiplicity equals p up to a unit; the factors are
    pairwise coprime and squarefree.  Works over QQ and over extensions
    (characteristic zero throughout).
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    if p.degree() == 0:
        return []
    g = poly_gcd(p, p.derivative())
    out = []
    if g.degree() == 0:
        return [(p.monic(), 1)]
    w = p.exact_div(g)
    i = 1
    while w.degree() > 0:
        y = poly_gcd(w, g)
        z = w.exact_div(y)
        if z.degree() > 0:
            out.append((z.monic(), i))
        w = y
        g = g.exact_div(y)
        i += 1
    return out


# ---------------------------------------------------------------------------
# factorization


def factor_rational(p):
    """Irreducible factors over QQ of a nonzero squarefree polynomial (monic output)."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.field is not QQ:
        raise TypeError("factor_rational expects rational coefficients")
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c) * x**i for i, c in enumerate(p.coeffs))
    _, factors = sympy.Poly(expr, x, domain="QQ").factor_list()
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(*sympy.Rational(c).as_numer_denom()) for c in reversed(fac.all_coeffs())]
        q = UniPoly(QQ, coeffs).monic()
        out.extend([q] * mult)
    return out


def _sylvester_resultant(a_coeffs, b_coeffs, ring_zero, ring_one):
    """Resultant of two polynomials given by coefficient lists (low first) whose
    coefficients live in a commutative ring with exact division (Bareiss)."""
    m = len(a_coeffs) - 1
    n = len(b_coeffs) - 1
    if m < 0 or n < 0:
        return ring_zero
    size = m + n
    if size == 0:
        return ring_one
    rows = []
    ra = list(reversed(a_coeffs))
    rb = list(reversed(b_coeffs))
    for i in range(n):
        rows.append([ring_zero] * i + ra + [ring_zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([ring_zero] * i + rb + [ring_zero] * (size - i - n - 1))
    # Bareiss fraction-free elimination
    sign = 1
    prev = ring_one
    for k in range(size - 1):
        if not rows[k][k]:
            swap = next((i for i in range(k + 1, size) if rows[i][k]), None)
            if swap is None:
                return ring_zero
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]
                rows[i][j] = num.exact_div(prev) if isinstance(num, UniPoly) else num / prev
            rows[i][k] = ring_zero
        prev = rows[k][k]
    det = rows[size - 1][size - 1]
    return -det if sign < 0 else det


def _norm_to_base(p):
    """Norm of p in K[x] down to base(K)[x], K a simple extension: Res_t(modulus, lift)."""
    ext = p.field
    base = ext.base
    zero = UniPoly(base, [])
    one = UniPoly.const(base, base.one)
    # lift: view p as a polynomial in the generator t with UniPoly-in-x coefficients
    tdeg = ext.degree - 1
    lift = [[] for _ in range(tdeg + 1)]
    for i, c in enumerate(p.coeffs):
        rep = c.rep if isinstance(c, ExtElement) else (base.coerce(c),)
        for t_pow in range(tdeg + 1):
            coef = rep[t_pow] if t_pow < len(rep) else base.zero
            lift[t_pow].append(coef)
    lift_polys = [UniPoly(base, cs) for cs in lift]
    while len(lift_polys) > 1 and lift_polys[-1].is_zero():
        lift_polys.pop()
    mod_polys = [UniPoly.const(base, c) for c in ext.modulus.coeffs]
    return _sylvester_resultant(mod_polys, lift_polys, zero, one)


def factor_over(p, field=None):
    """Irreducible monic factors of a nonzero squarefree p over its field.

    Over QQ this is sympy's rational factorization; over a SimpleExtension it
    is Trager's algorithm, recursing through the tower.
    """
    field = field or p.field
    if field is QQ:
        return factor_rational(p)
    p = p.monic()
    alpha = field.gen
    s = 0
    while True:
        shifted = p.compose_linear(alpha * (-s)) if s else p
        norm = _norm_to_base(shifted)
        if poly_gcd(norm, norm.derivative()).degree() == 0:
            break
        s += 1
        if s > 4 * field.degree * max(1, p.degree()) + 8:
            raise RuntimeError("Trager shift search failed to find a squarefree norm")
    base_factors = factor_over(norm, field.base)
    if len(base_factors) == 1:
        return [p]
    out = []
    g = shifted
    for bf in base_factors:
        lifted = UniPoly(field, [field.coerce(c) for c in bf.coeffs])
        fac = poly_gcd(g, lifted)
        if fac.degree() > 0:
            g = g.exact_div(fac)
            out.append(fac.compose_linear(alpha * s).monic() if s else fac.monic())
    if sum(f.degree() for f in out) != p.degree():
        raise RuntimeError("Trager factorization lost degree; inconsistent input")
    return out
