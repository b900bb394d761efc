r"""Numerical lattice of a minimal embedded resolution.

From a validated Enriques diagram this module computes, for the resolution
it encodes:

* pullback orders a_p (order of the total transform of the curve along
  each exceptional divisor), by the proximity recursion
  a_p = m_p + sum of a_q over the targets q that p is proximate to;
* relative canonical orders k_p = 1 + sum of k_q over the same targets;
* the full intersection matrix of the reduced total transform: a divisor
  has self-intersection -1 - (number of points proximate to it), two
  exceptional divisors meet exactly when one is proximate to the other and
  no later point is proximate to both, and each strict-transform component
  crosses the divisor of its terminal point once;
* valences: how many other components of the reduced total transform meet
  each exceptional divisor.

Everything is integer arithmetic; both a and k come from the forward
recursion, never from matrix inversion.  The orthogonality of the pullback
(total transform times any exceptional divisor is zero) is recomputed and
enforced as an internal invariant.
"""

from dataclasses import dataclass

from .cluster import InvariantViolation, validate


@dataclass(frozen=True)
class ResolutionData:
    """Resolution lattice of a diagram.

    Components are ordered exceptional-first: E0..E{n-1} in blowup order,
    then one strict component per branch.  ``matrix`` is the full symmetric
    intersection matrix over that ordering (strict-by-strict entries are 0:
    strict transforms of distinct branches are disjoint, and a germ's strict
    component has no self-intersection number).
    """

    diagram: object
    exc_names: tuple
    strict_names: tuple
    a_exc: tuple
    a_strict: tuple
    k_exc: tuple
    matrix: tuple
    valence: tuple
    sparse: tuple  # per row: tuple of (index, entry) over the nonzero entries

    # -- convenience

    def nexc(self):
        return len(self.exc_names)

    def names(self):
        return self.exc_names + self.strict_names

    def a(self, idx):
        n = self.nexc()
        return self.a_exc[idx] if idx < n else self.a_strict[idx - n]

    def row(self, idx):
        return self.matrix[idx]


def pullback_orders(d):
    """Map point id -> order of the curve's total transform along its divisor."""
    _require_valid(d)
    a = []
    for p in d.points:
        val = d.total_mult(p.id)
        for q in p.proximities():
            val += a[q]
        a.append(val)
    return a


def canonical_orders(d):
    """Map point id -> order of the relative canonical divisor along its divisor."""
    _require_valid(d)
    k = []
    for p in d.points:
        val = 1
        for q in p.proximities():
            val += k[q]
        k.append(val)
    return k


def intersection_matrix(d):
    """Full intersection matrix over exceptional then strict components."""
    _require_valid(d)
    n = d.npoints()
    s = len(d.branches)
    size = n + s
    m = [[0] * size for _ in range(size)]
    prox_pairs = {(p.parent, p.extra) for p in d.points if p.extra is not None}
    for p in d.points:
        m[p.id][p.id] = -1 - len(d.proximate_to(p.id))
        for q in p.proximities():
            # the divisors of q and p meet unless a later blowup separates
            # them, i.e. some point is proximate to both
            if (p.id, q) not in prox_pairs:
                m[p.id][q] = m[q][p.id] = 1
    for bi, b in enumerate(d.branches):
        if b.path:
            t = b.path[-1]
            m[n + bi][t] = m[t][n + bi] = 1
    return tuple(tuple(row) for row in m)


def valences(d):
    """Map point id -> number of other components of the reduced total
    transform meeting its divisor."""
    m = intersection_matrix(d)
    n = d.npoints()
    return [sum(m[j][i] for i in range(len(m)) if i != j) for j in range(n)]


def resolve(d):
    """Bundle the whole lattice; checks the pullback orthogonality invariant."""
    a = pullback_orders(d)
    k = canonical_orders(d)
    m = intersection_matrix(d)
    n = d.npoints()
    strict_names = tuple(b.name for b in d.branches)
    coeffs = tuple(b.coefficient for b in d.branches)
    full_a = list(a) + list(coeffs)
    for j in range(n):
        dot = sum(full_a[i] * m[i][j] for i in range(len(full_a)))
        if dot != 0:
            raise InvariantViolation(
                f"pullback is not orthogonal to E{j}: (pi* C).E{j} = {dot}"
            )
    val = valences(d)
    sparse = tuple(
        tuple((i, row[i]) for i in range(len(row)) if row[i]) for row in m
    )
    return ResolutionData(
        diagram=d,
        exc_names=tuple(f"E{i}" for i in range(n)),
        strict_names=strict_names,
        a_exc=tuple(a),
        a_strict=coeffs,
        k_exc=tuple(k),
        matrix=m,
        valence=tuple(val),
        sparse=sparse,
    )


def _require_valid(d):
    problems = validate(d)
    if problems:
        raise ValueError("invalid diagram: " + "; ".join(problems))


def is_negative_definite(r):
    """Exact negative-definiteness of the exceptional intersection block,
    by alternating signs of leading principal minors."""
    n = r.nexc()
    for size in range(1, n + 1):
        minor = _int_det([list(r.matrix[i][:size]) for i in range(size)])
        if minor * (-1) ** size <= 0:
            return False
    return True


def _int_det(rows):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


# ---------------------------------------------------------------------------
# dual graph


@dataclass(frozen=True)
class DualGraph:
    """Dual graph of the reduced total transform: one node per component,
    labelled with its numerical data; edges are intersections."""

    nodes: tuple  # (name, label dict)
    edges: tuple  # (name, name)


def dual_graph(d):
    """Dual graph with labels (a, k, self-intersection) on exceptional nodes
    and the coefficient on strict nodes.  An empty diagram (a germ already
    in normal crossing) yields the strict components alone, with no edges."""
    if d.npoints() == 0:
        nodes = tuple((b.name, {"a": b.coefficient}) for b in d.branches)
        return DualGraph(nodes=nodes, edges=())
    r = resolve(d)
    nodes = []
    n = r.nexc()
    for i, name in enumerate(r.exc_names):
        nodes.append(
            (name, {"a": r.a_exc[i], "k": r.k_exc[i], "self": r.matrix[i][i]})
        )
    for bi, name in enumerate(r.strict_names):
        nodes.append((name, {"a": r.a_strict[bi]}))
    edges = []
    size = n + len(r.strict_names)
    allnames = r.names()
    for i in range(size):
        for j in range(i + 1, size):
            if r.matrix[i][j]:
                edges.append((allnames[i], allnames[j]))
    return DualGraph(nodes=tuple(nodes), edges=tuple(edges))


def to_dot(graph):
    """DOT text of a dual graph; node labels like "E3 [a=12,k=6,self=-1]"."""
    lines = ["graph dual {"]
    for name, labels in graph.nodes:
        inner = ",".join(f"{k}={v}" for k, v in labels.items())
        lines.append(f'  "{name}" [label="{name} [{inner}]"];')
    for u, v in graph.edges:
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
