r"""Polynomial frontend: parse f(x, y), split it into analytic branches at
the origin by a rational Newton-Puiseux expansion, and hand the branch
combinatorics to the diagram builder.

The expansion is the classical edge recursion in Duval's rational
normalization.  At each node, every compact edge p i + q j = c of the
Newton polygon carries a characteristic polynomial phi(T) collecting the
edge coefficients in steps of p; for each irreducible factor h of phi over
the current field, one recursive call is made over K[T]/h with the
substitution

    X = tau^a T^p,   Y = tau^b T^q (1 + Y')      (b p - a q = 1)

which divides out T^c exactly.  Choosing the Bezout powers this way makes
the leading series coefficient c of the branch satisfy c^p = tau, so
distinct conjugates of tau give distinct coefficient orbits: the pairwise
coincidence exponents read off the recursion tree are unambiguous, and the
conjugacy bookkeeping never needs a choice of embedding.

Branch classes are expanded (one branch per embedding of the class's
extension tower); contacts between branches are converted from coincidence
exponents to shared-infinitely-near-point counts by running two blowup
walks in lockstep: 'lo' and 'hi' moves land on positions determined by the
common history, and an 'exit' move lands on a shared point exactly when
the consumed term sits strictly below the coincidence exponent.

Branches whose expansion would need extensions beyond the configured depth
produce a hard error naming the required extension; the diagram pipeline
accepts combinatorial branch input instead, so the frontend is never a
correctness bottleneck.
"""

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .arith import (
    QQ,
    ExtensionDepthError,
    SimpleExtension,
    UniPoly,
    factor_over,
    squarefree_part,
)
from .branch import (
    CharExponents,
    blowup_walk,
    characteristic_exponents_from_multiplicities,
    _walk_sequence,
)
from .cluster import build_diagram
from .polynomials import BivarPoly, lower_edges


class ParseError(ValueError):
    """Syntax error in polynomial text, with its offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class PuiseuxError(ValueError):
    """The expansion cannot proceed (depth limit, degenerate input, ...)."""


@dataclass(frozen=True)
class CurveInput:
    """A parsed curve: the polynomial and the germ-at-origin convention."""

    poly: BivarPoly
    at_origin: bool = True

    def __post_init__(self):
        if self.poly.is_zero():
            raise PuiseuxError("the zero polynomial does not define a curve")
        if self.poly.value_at_origin():
            raise PuiseuxError("the curve does not pass through the origin")


@dataclass(frozen=True)
class BranchResult:
    """One analytic branch at the origin.

    coefficient is the multiplicity of the branch in f; class_size the
    number of conjugate branches sharing its field; contacts map the other
    branches' names to shared infinitely-near-point counts.
    """

    name: str
    char: CharExponents
    coefficient: int
    class_size: int
    contacts: dict


# ---------------------------------------------------------------------------
# parser


_TOKENS = ("number", "name", "op", "end")


def _tokenize(text):
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(("number", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()/":
            out.append(("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val, off = self.peek()
        if kind == "op" and val == op:
            return self.take()
        raise ParseError(f"expected {op!r}", off)

    def parse(self):
        poly = self.expr()
        kind, val, off = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", off)
        return poly

    def expr(self):
        kind, val, off = self.peek()
        sign = 1
        while kind == "op" and val in "+-":
            self.take()
            if val == "-":
                sign = -sign
            kind, val, off = self.peek()
        poly = self.term()
        if sign < 0:
            poly = -poly
        while True:
            kind, val, off = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                poly = poly + rhs if val == "+" else poly - rhs
            else:
                return poly

    def term(self):
        poly = self.factor()
        while True:
            kind, val, off = self.peek()
            if kind == "op" and val == "*":
                self.take()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self):
        base = self.atom()
        kind, val, off = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, off = self.peek()
            if kind != "number":
                raise ParseError("expected an integer exponent", off)
            self.take()
            return base.pow(int(val))
        return base

    def atom(self):
        kind, val, off = self.take()
        if kind == "op" and val == "(":
            poly = self.expr()
            self.expect_op(")")
            return poly
        if kind == "number":
            num = int(val)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, off3 = self.take()
                if k3 != "number":
                    raise ParseError("expected a denominator", off3)
                if int(v3) == 0:
                    raise ParseError("zero denominator", off3)
                return BivarPoly({(0, 0): Fraction(num, int(v3))})
            return BivarPoly({(0, 0): Fraction(num)})
        if kind == "name":
            if val == "x":
                return BivarPoly({(1, 0): Fraction(1)})
            if val == "y":
                return BivarPoly({(0, 1): Fraction(1)})
            raise ParseError(f"unknown identifier {val!r}", off)
        raise ParseError(f"unexpected {val!r}" if val else "unexpected end of input", off)


def parse(text):
    """Parse polynomial text over the rationals.

    Grammar: integers, rationals p/q, variables x and y, operators + - * ^
    and parentheses; implicit multiplication is a syntax error.  Errors
    carry the offending offset.
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# the expansion


@dataclass(frozen=True)
class _Stage:
    edge_key: tuple  # (p, q) of the edge at its node
    factor_key: int  # index of the irreducible factor within the node's edge list
    p: int
    q: int
    a: int
    b: int
    tau: object  # root of the factor (field element of the child field)
    ext_degree: int
    eps: Fraction  # absolute x-exponent of the term consumed by this stage


@dataclass
class _Class:
    stages: tuple  # path of _Stage from the root
    exact: bool  # True when the branch closes with an identically zero tail
    field: object
    leaf_poly: object  # residual F(T, Y) at the leaf (None when exact)
    vertical_axis: bool = False  # the branch {x = 0}

    @property
    def N(self):
        n = 1
        for s in self.stages:
            n *= s.p
        return n

    def t_support(self):
        """Series support in leaf-parameter orders (integers)."""
        ts = []
        for s in self.stages:
            t = s.eps * self.N
            if t.denominator != 1:
                raise PuiseuxError("non-integral parameter order; expansion bug")
            ts.append(int(t))
        return ts

    def size(self):
        k = 1
        for s in self.stages:
            k *= s.ext_degree
        return k


def _bezout(p, q):
    if q == 1:
        return p - 1, 1
    b = pow(p, -1, q)
    a = (b * p - 1) // q
    return a, b


def _to_field(field, poly):
    """Recoerce a BivarPoly's coefficients into ``field``."""
    return BivarPoly({k: field.coerce(c) for k, c in poly.terms.items()})


def _edge_char_poly(field, poly, p, q, pts):
    """phi(T) collecting the edge coefficients in steps of p."""
    jmin = min(j for _, j in pts)
    degree = max((j - jmin) // p for _, j in pts)
    coeffs = [field.zero] * (degree + 1)
    for (i, j) in pts:
        coeffs[(j - jmin) // p] = poly.terms[(i, j)]
    return UniPoly(field, coeffs)


def _substitute(field, poly, p, q, a, b, tau, level):
    """F(tau^a T^p, tau^b T^q (1 + Y)) / T^level, over ``field``."""
    one = field.one
    maxj = max(j for _, j in poly.terms)
    # (1 + Y)^j for all needed j
    ypows = [BivarPoly({(0, 0): one})]
    one_plus_y = BivarPoly({(0, 0): one, (0, 1): one})
    for _ in range(maxj):
        ypows.append(ypows[-1] * one_plus_y)
    out = BivarPoly({})
    for (i, j), c in poly.terms.items():
        scale = field.coerce(c) * tau ** (a * i + b * j)
        tpow = p * i + q * j - level
        if tpow < 0:
            raise PuiseuxError("edge level is not minimal; expansion bug")
        contrib = BivarPoly(
            {(tpow + 0, jj): cf * scale for (_, jj), cf in ypows[j].terms.items()}
        )
        out = out + contrib
    return out


def _factor_edge_poly(field, phi):
    """Irreducible factors of phi with multiplicities, over ``field``."""
    out = []
    for part, mult in squarefree_part(phi):
        for h in factor_over(part, field):
            out.append((h, mult))
    return out


def _expand(field, poly, xexp, off, path, classes, depth_limit):
    """Recursive edge expansion; appends _Class records to ``classes``."""
    # exact branch: the current y-coordinate divides the equation
    ymin = poly.y_order()
    if ymin is not None and ymin > 0:
        classes.append(_Class(stages=path, exact=True, field=field, leaf_poly=None))
        poly = poly.shift_down(0, ymin)
    if poly.value_at_origin() or not poly.terms:
        return  # the remaining curve avoids this point
    for p, q, level, pts in lower_edges(poly.support()):
        phi = _edge_char_poly(field, poly, p, q, pts)
        for fidx, (h, mult) in enumerate(_factor_edge_poly(field, phi)):
            if h.degree() == 1:
                child_field = field
                tau = -h.coeffs[0] / h.coeffs[1]
            else:
                try:
                    child_field = SimpleExtension(
                        field, h, name=f"a{field.depth + 1}", depth_limit=depth_limit
                    )
                except ExtensionDepthError as exc:
                    raise PuiseuxError(
                        f"branch expansion needs {exc}; raise the extension depth "
                        f"limit or supply combinatorial branch input"
                    ) from exc
                tau = child_field.gen
            a, b = _bezout(p, q)
            child_xexp = Fraction(xexp, p)
            eps = off + q * child_xexp
            stage = _Stage(
                edge_key=(p, q),
                factor_key=fidx,
                p=p,
                q=q,
                a=a,
                b=b,
                tau=tau,
                ext_degree=max(1, h.degree()),
                eps=eps,
            )
            node_poly = poly if child_field is field else _to_field(child_field, poly)
            child_poly = _substitute(child_field, node_poly, p, q, a, b, tau, level)
            if mult == 1:
                classes.append(
                    _Class(
                        stages=path + (stage,),
                        exact=(child_poly.y_order() or 0) > 0,
                        field=child_field,
                        leaf_poly=child_poly,
                    )
                )
            else:
                _expand(
                    child_field,
                    child_poly,
                    child_xexp,
                    eps,
                    path + (stage,),
                    classes,
                    depth_limit,
                )


# ---------------------------------------------------------------------------
# per-class data: walks, exponents, parametrizations


def _class_walk_args(cls):
    """(ord_x, term orders) feeding the blowup walk for a class."""
    if cls.vertical_axis:
        return None, [1]
    ts = cls.t_support()
    if not ts:  # the branch {y = 0}
        return cls.N, []
    return cls.N, ts


def _class_char(cls):
    ord_x, ts = _class_walk_args(cls)
    seq = _walk_sequence(ord_x, ts)
    return characteristic_exponents_from_multiplicities([e.mult for e in seq])


def _move_stream(cls):
    ord_x, ts = _class_walk_args(cls)
    gen = blowup_walk(ord_x, ts, limit=1 << 20)
    next(gen)
    for step in gen:
        if step.move == "exit":
            yield ("exit", step.exponent)
        else:
            yield (step.move,)


def _shared_points(cls_a, cls_b, kappa, cap=100000):
    """Number of shared infinitely near points from the coincidence exponent."""
    count = 1
    sa, sb = _move_stream(cls_a), _move_stream(cls_b)
    for _ in range(cap):
        ma, mb = next(sa), next(sb)
        if ma[0] == "exit" and mb[0] == "exit":
            if ma[1] == mb[1] and (kappa is None or ma[1] < kappa):
                count += 1
                continue
            return count
        if ma == mb:
            count += 1
            continue
        return count
    raise PuiseuxError("contact computation exceeded its step bound")


def _next_eps(cls, depth):
    """Exponent of the class's term at path depth ``depth`` (None = none)."""
    if depth < len(cls.stages):
        return cls.stages[depth].eps
    return None


def _pair_kappa(br_a, br_b):
    """Coincidence exponent of two expanded branches (None = axis pairing,
    handled structurally by the lockstep)."""
    ca, cb = br_a.cls, br_b.cls
    if ca.vertical_axis or cb.vertical_axis:
        return None
    depth = 0
    while True:
        sa = ca.stages[depth] if depth < len(ca.stages) else None
        sb = cb.stages[depth] if depth < len(cb.stages) else None
        if sa is None and sb is None:
            raise PuiseuxError("two branches with identical expansions")
        if (
            sa is not None
            and sb is not None
            and sa.edge_key == sb.edge_key
            and sa.factor_key == sb.factor_key
            and sa.eps == sb.eps
        ):
            if sa.ext_degree > 1 and br_a.embedding[depth] != br_b.embedding[depth]:
                # conjugate split: distinct roots give distinct coefficient
                # orbits (the Bezout choice makes coeff^p equal tau)
                return sa.eps
            depth += 1
            continue
        vals = [s.eps for s in (sa, sb) if s is not None]
        return min(vals)


@dataclass
class _Expanded:
    name: str
    cls: _Class
    embedding: tuple
    coefficient: int


# ---------------------------------------------------------------------------
# parametrization and ownership


def _series_mul(u, v, cut):
    out = {}
    for du, cu in u.items():
        for dv, cv in v.items():
            d = du + dv
            if d > cut:
                continue
            w = out.get(d)
            w = cu * cv if w is None else w + cu * cv
            out[d] = w
    return {d: c for d, c in out.items() if c}


def _tail_series(cls, cut):
    """Solve the leaf equation for its Y-series up to parameter order cut."""
    if cls.exact or cls.leaf_poly is None:
        return {}
    F = cls.leaf_poly
    field = cls.field
    b0 = F.terms.get((0, 1))
    if not b0:
        raise PuiseuxError("leaf equation is not regular; expansion bug")
    y = {}
    for m in range(1, cut + 1):
        # coefficient of T^m in F(T, y)
        acc = field.zero
        for (i, j), c in F.terms.items():
            if i > m:
                continue
            if j == 0:
                if i == m:
                    acc = acc + field.coerce(c)
                continue
            # multiply out y^j, keep T^(m - i)
            pw = {0: field.one}
            for _ in range(j):
                pw = _series_mul(pw, y, m - i)
            if (m - i) in pw:
                acc = acc + field.coerce(c) * pw[m - i]
        if acc:
            y[m] = -acc / b0
    return y


def _parametrization(cls, cut):
    """x = cx T^N and the y-series of the class, to parameter order cut."""
    field = cls.field
    if cls.vertical_axis:
        return Fraction(0), {1: Fraction(1)}, 1
    stages = cls.stages
    L = len(stages)
    consts = [None] * (L + 1)
    powers = [None] * (L + 1)
    consts[L] = field.one
    powers[L] = 1
    for k in range(L - 1, 0, -1):
        st = stages[k]  # stage k+1 in 1-indexed terms
        consts[k] = field.coerce(st.tau) ** st.a * consts[k + 1] ** st.p
        powers[k] = st.p * powers[k + 1]
    y = _tail_series(cls, cut)
    for k in range(L, 0, -1):
        st = stages[k - 1]
        ck, pk = consts[k], powers[k]
        lead = field.coerce(st.tau) ** st.b * ck**st.q
        deg = st.q * pk
        shifted = {}
        if deg <= cut:
            shifted[deg] = lead
            for d, c in y.items():
                if deg + d <= cut:
                    shifted[deg + d] = lead * c
        y = shifted
    if L:
        st = stages[0]
        cx = field.coerce(st.tau) ** st.a * consts[1] ** st.p
        N = st.p * powers[1]
    else:
        cx, N = field.one, 1
    return cx, y, N


def _owner_order(part, cls, cut):
    """Order of part(x(T), y(T)) up to cut; None when it vanishes through cut."""
    field = cls.field
    cx, y, N = _parametrization(cls, cut)
    acc = {}
    xpow = {0: field.one}
    ypows = {0: {0: field.one}}
    for (i, j) in sorted(part.terms):
        c = field.coerce(part.terms[(i, j)])
        if cls.vertical_axis and i > 0:
            continue  # x vanishes identically on the vertical axis
        xi = (field.one * cx**i) if not cls.vertical_axis else field.one
        xdeg = N * i if not cls.vertical_axis else 0
        if xdeg > cut:
            continue
        if j not in ypows:
            prev = max(k for k in ypows if k < j)
            cur = ypows[prev]
            for _ in range(j - prev):
                cur = _series_mul(cur, y, cut)
            ypows[j] = cur
        for d, cy in ypows[j].items():
            tot = xdeg + d
            if tot > cut:
                continue
            v = acc.get(tot, field.zero) + c * xi * cy
            acc[tot] = v
    orders = sorted(d for d, c in acc.items() if c)
    return orders[0] if orders else None


# ---------------------------------------------------------------------------
# public frontend


def _sqf_parts(f):
    x, y = sympy.symbols("x y")
    expr = sympy.Add(
        *[sympy.Rational(c) * x**i * y**j for (i, j), c in f.terms.items()]
    )
    unit, parts = sympy.Poly(expr, x, y, domain="QQ").sqf_list()
    out = []
    for qpoly, e in parts:
        terms = {}
        for monom, c in qpoly.terms():
            terms[(int(monom[0]), int(monom[1]))] = Fraction(
                *sympy.Rational(c).as_numer_denom()
            )
        out.append((BivarPoly(terms), int(e)))
    return out


def puiseux_branches(f, ext_depth=2):
    """Analytic branches of f at the origin, with coefficients, conjugacy
    class sizes, and pairwise contacts.

    Raises PuiseuxError when the input is no germ (f zero or a unit at the
    origin) or when the expansion needs a deeper extension tower than
    ``ext_depth`` allows.
    """
    if isinstance(f, CurveInput):
        f = f.poly
    if isinstance(f, str):
        f = parse(f)
    CurveInput(f)  # validates
    parts = _sqf_parts(f)
    reduced = BivarPoly({(0, 0): Fraction(1)})
    for part, _ in parts:
        reduced = reduced * part

    classes = []
    xo = reduced.x_order()
    if xo and xo > 0:
        classes.append(
            _Class(stages=(), exact=True, field=QQ, leaf_poly=None, vertical_axis=True)
        )
        reduced = reduced.shift_down(xo, 0)
    _expand(QQ, reduced, Fraction(1), Fraction(0), (), classes, ext_depth)

    # ownership: which squarefree part each class belongs to
    owners = []
    for cls in classes:
        if len(parts) == 1:
            owners.append(parts[0][1])
            continue
        cut = 16
        while True:
            alive = [
                e for part, e in parts if _owner_order(part, cls, cut) is None
            ]
            if len(alive) == 1:
                owners.append(alive[0])
                break
            if cut > 1 << 14:
                raise PuiseuxError("could not attribute a branch to a factor")
            cut *= 2

    # expand conjugacy classes into individual branches
    expanded = []
    for cls, coeff in zip(classes, owners):
        degs = [s.ext_degree for s in cls.stages]
        embeddings = [()]
        for d in degs:
            embeddings = [e + (i,) for e in embeddings for i in range(d)]
        for emb in embeddings:
            expanded.append(_Expanded(name="", cls=cls, embedding=emb, coefficient=coeff))
    for i, br in enumerate(expanded):
        br.name = "B" if len(expanded) == 1 else f"B{i + 1}"

    chars = {id(br): _class_char(br.cls) for br in expanded}
    out = []
    contacts_by_pair = {}
    for i, bi in enumerate(expanded):
        for j in range(i + 1, len(expanded)):
            bj = expanded[j]
            kappa = _pair_kappa(bi, bj)
            contacts_by_pair[(i, j)] = _shared_points(bi.cls, bj.cls, kappa)
    for i, br in enumerate(expanded):
        cmap = {}
        for j, other in enumerate(expanded):
            if j == i:
                continue
            key = (min(i, j), max(i, j))
            cmap[other.name] = contacts_by_pair[key]
        out.append(
            BranchResult(
                name=br.name,
                char=chars[id(br)],
                coefficient=br.coefficient,
                class_size=br.cls.size(),
                contacts=cmap,
            )
        )

    total = sum(b.coefficient * b.char.beta0 for b in out)
    if total != f.order():
        raise PuiseuxError(
            f"multiplicity bookkeeping failed: branches give {total}, "
            f"the curve has order {f.order()}"
        )
    return out


def to_diagram(branches):
    """Enriques diagram of a list of BranchResults (or of a polynomial)."""
    if isinstance(branches, (str, BivarPoly, CurveInput)):
        branches = puiseux_branches(branches)
    names = [b.name for b in branches]
    idx = {n: i for i, n in enumerate(names)}
    contacts = {}
    for b in branches:
        for other, c in b.contacts.items():
            i, j = idx[b.name], idx[other]
            key = (min(i, j), max(i, j))
            if key in contacts and contacts[key] != c:
                raise PuiseuxError("asymmetric contact data")
            contacts[key] = c
    return build_diagram(
        [(b.char, b.coefficient) for b in branches], contacts=contacts, names=names
    )
