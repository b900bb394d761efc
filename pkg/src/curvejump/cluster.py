r"""Enriques diagrams: the tree of infinitely near points of a minimal
embedded resolution, decorated with proximities and curve multiplicities.

``build_diagram`` assembles the diagram of a multi-branch germ from each
branch's characteristic exponents, a coefficient (for non-reduced curves),
and pairwise contact data given as the number of shared infinitely near
points.  Contacts must be tree-consistent (for any three branches the two
smallest pairwise counts agree) and the shared prefixes must carry the same
proximity structure in every branch; otherwise no curve realizes the data
and the build rejects it.

Points are indexed in blowup order: by depth in the tree, and within a
depth by the declaration order of the earliest branch through them.  This
reproduces the level-by-level blowup narrative and keeps divisor indexing
reproducible across runs.

``validate`` re-checks a diagram from scratch (tree shape, proximity
cardinality and targets, proximity inequality, minimality, and the
simple-normal-crossing completeness of every branch), returning a list of
violations instead of raising; the builder's output always validates.
"""

from dataclasses import dataclass

from .branch import (
    CharExponents,
    extended_kinds,
    extended_mults,
    multiplicity_sequence,
)


class DiagramBuildError(ValueError):
    """Input data (branches/contacts) not realizable by any plane curve germ."""


class InvariantViolation(RuntimeError):
    """An internal consistency guarantee failed; never expected on valid input."""


@dataclass(frozen=True)
class Point:
    """An infinitely near point: its parent and (for satellites) the second
    proximity target, both given as earlier point ids."""

    id: int
    parent: object  # int | None (None only for the root)
    extra: object = None  # int | None

    @property
    def kind(self):
        return "satellite" if self.extra is not None else "free"

    def proximities(self):
        out = set()
        if self.parent is not None:
            out.add(self.parent)
        if self.extra is not None:
            out.add(self.extra)
        return out


@dataclass(frozen=True)
class DiagramBranch:
    """A branch of the curve germ: coefficient, path of point ids (a chain
    from the root), per-point multiplicities, and optional exponent data."""

    name: str
    coefficient: int
    path: tuple
    mults: tuple
    char: object = None  # CharExponents | None


@dataclass(frozen=True)
class EnriquesDiagram:
    points: tuple
    branches: tuple

    # -- basic structure

    def npoints(self):
        return len(self.points)

    def total_mult(self, pid):
        """Total curve multiplicity at a point: sum of coefficient times
        branch multiplicity over the branches through it."""
        out = 0
        for b in self.branches:
            if pid in b.path:
                out += b.coefficient * b.mults[b.path.index(pid)]
        return out

    def proximate_to(self, pid):
        """Points proximate to pid (the points whose blowup centers lie on
        the divisor created at pid)."""
        return [q.id for q in self.points if pid in q.proximities()]

    def depth(self, pid):
        d = 0
        p = self.points[pid]
        while p.parent is not None:
            p = self.points[p.parent]
            d += 1
        return d

    def ancestors(self, pid):
        out = []
        p = self.points[pid]
        while p.parent is not None:
            out.append(p.parent)
            p = self.points[p.parent]
        return out

    # -- serialization (the file-format escape hatch for the CLI)

    def to_dict(self):
        pts = []
        for p in self.points:
            d = {"id": p.id, "parent": p.parent}
            if p.extra is not None:
                d["extra_proximity"] = p.extra
            pts.append(d)
        brs = []
        for b in self.branches:
            brs.append(
                {"name": b.name, "multiplicity": b.coefficient, "path": list(b.path)}
            )
        return {"points": pts, "branches": brs}

    @classmethod
    def from_dict(cls, data):
        try:
            raw_pts = data["points"]
            raw_brs = data["branches"]
        except (KeyError, TypeError) as exc:
            raise DiagramBuildError(f"diagram file missing section: {exc}") from exc
        by_id = {}
        for rp in raw_pts:
            pid = int(rp["id"])
            if pid in by_id:
                raise DiagramBuildError(f"duplicate point id {pid}")
            by_id[pid] = Point(pid, rp.get("parent"), rp.get("extra_proximity"))
        if sorted(by_id) != list(range(len(by_id))):
            raise DiagramBuildError("point ids must be 0..n-1")
        points = tuple(by_id[i] for i in range(len(by_id)))
        branches = []
        for rb in raw_brs:
            path = tuple(int(i) for i in rb["path"])
            if any(i not in by_id for i in path):
                raise DiagramBuildError(f"branch {rb.get('name')} path leaves the diagram")
            mults = _derive_branch_mults(points, path)
            branches.append(
                DiagramBranch(
                    name=str(rb.get("name", f"C{len(branches) + 1}")),
                    coefficient=int(rb.get("multiplicity", 1)),
                    path=path,
                    mults=mults,
                )
            )
        return cls(points=points, branches=tuple(branches))


def _derive_branch_mults(points, path):
    """Branch multiplicities along a path from proximity equality.

    Within one branch the multiplicity at a non-terminal point equals the
    sum over its proximate points on the path, and the terminal point has
    multiplicity 1; running the recursion backwards recovers the whole
    sequence from the path alone.
    """
    mults = [0] * len(path)
    pos = {pid: i for i, pid in enumerate(path)}
    mults[-1] = 1
    for i in range(len(path) - 2, -1, -1):
        pid = path[i]
        total = 0
        for j in range(i + 1, len(path)):
            if pid in points[path[j]].proximities():
                total += mults[j]
        mults[i] = total if total > 0 else 1
    return tuple(mults)


# ---------------------------------------------------------------------------
# building


def build_diagram(branches, contacts=None, names=None):
    """Assemble the Enriques diagram of a multi-branch germ.

    Parameters
    ----------
    branches : list of (CharExponents, coefficient)
        One entry per analytic branch; the coefficient is the multiplicity
        of the branch in the (possibly non-reduced) curve.
    contacts : dict, optional
        Map from index pairs (i, j) to the number of shared infinitely near
        points.  Missing pairs default to 1 (distinct tangent directions).
    names : list of str, optional
        Branch names; defaults to C (single branch) or C1, C2, ...

    Raises DiagramBuildError when the contacts violate the tree condition or
    a shared prefix has mismatched proximity structure.
    """
    specs = []
    for ch, coeff in branches:
        if not isinstance(ch, CharExponents):
            ch = CharExponents(tuple(ch))
        coeff = int(coeff)
        if coeff < 1:
            raise DiagramBuildError("branch coefficients must be positive")
        specs.append((ch, coeff))
    n = len(specs)
    if n == 0:
        raise DiagramBuildError("a curve germ needs at least one branch")
    if names is None:
        names = ["C"] if n == 1 else [f"C{i + 1}" for i in range(n)]

    cmap = {}
    for i in range(n):
        for j in range(i + 1, n):
            cmap[(i, j)] = 1
    for key, val in (contacts or {}).items():
        i, j = sorted(key)
        if i == j or not (0 <= i < j < n):
            raise DiagramBuildError(f"contact key {key} does not name two branches")
        val = int(val)
        if val < 1:
            raise DiagramBuildError("branches through the same point share the root")
        cmap[(i, j)] = val

    def contact(i, j):
        return cmap[(min(i, j), max(i, j))] if i != j else None

    # tree condition: the two smallest of any three pairwise contacts agree
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                trip = sorted([contact(i, j), contact(i, k), contact(j, k)])
                if trip[0] != trip[1]:
                    raise DiagramBuildError(
                        f"contacts of branches {i},{j},{k} violate the tree "
                        f"condition: {contact(i,j)}, {contact(i,k)}, {contact(j,k)}"
                    )

    # path length per branch: its own sequence, extended to the deepest contact
    seqs = [multiplicity_sequence(ch) for ch, _ in specs]
    lengths = []
    for i in range(n):
        need = max([len(seqs[i])] + [contact(i, j) for j in range(n) if j != i])
        lengths.append(need)

    # shared prefixes must agree on proximity structure, and the branches
    # must actually be able to part at the declared depth: a satellite
    # position is forced, so two branches whose next points are the same
    # satellite necessarily share it too
    for i in range(n):
        for j in range(i + 1, n):
            c = contact(i, j)
            ki = extended_kinds(specs[i][0], c + 1)
            kj = extended_kinds(specs[j][0], c + 1)
            if ki[:c] != kj[:c]:
                pos = next(t for t in range(c) if ki[t] != kj[t])
                raise DiagramBuildError(
                    f"branches {names[i]} and {names[j]} cannot share point "
                    f"{pos}: satellite structure differs ({ki[pos]!r} vs {kj[pos]!r})"
                )
            si, sj = ki[c], kj[c]
            if si is not None and si == sj:
                raise DiagramBuildError(
                    f"branches {names[i]} and {names[j]} cannot separate after "
                    f"{c} shared points: both continue through the same forced "
                    f"satellite position"
                )

    # merge the branch paths level by level (blowup order)
    kinds = [extended_kinds(specs[i][0], lengths[i]) for i in range(n)]
    mults = [extended_mults(specs[i][0], lengths[i]) for i in range(n)]
    paths = [[] for _ in range(n)]
    points = []
    depth = 0
    while True:
        alive = [i for i in range(n) if lengths[i] > depth]
        if not alive:
            break
        classes = []
        for i in alive:
            for cl in classes:
                if contact(i, cl[0]) > depth:
                    cl.append(i)
                    break
            else:
                classes.append([i])
        if depth > 0:
            # transitivity of "shares > depth points" follows from the tree
            # condition; members of one class must sit on one parent
            for cl in classes:
                parents = {paths[i][depth - 1] for i in cl}
                if len(parents) != 1:
                    raise InvariantViolation("contact classes are not nested by depth")
        for cl in classes:
            rep = cl[0]
            extra_local = kinds[rep][depth]
            for i in cl[1:]:
                if kinds[i][depth] != extra_local:
                    raise InvariantViolation("merged point with ambiguous kind")
            pid = len(points)
            parent = paths[rep][depth - 1] if depth > 0 else None
            extra = paths[rep][extra_local] if extra_local is not None else None
            points.append(Point(pid, parent, extra))
            for i in cl:
                paths[i].append(pid)
        depth += 1

    dbranches = tuple(
        DiagramBranch(
            name=names[i],
            coefficient=specs[i][1],
            path=tuple(paths[i]),
            mults=tuple(mults[i]),
            char=specs[i][0],
        )
        for i in range(n)
    )
    diagram = EnriquesDiagram(points=tuple(points), branches=dbranches)
    problems = validate(diagram)
    if problems:
        raise InvariantViolation(f"built diagram fails validation: {problems}")
    return diagram


# ---------------------------------------------------------------------------
# validation


def validate(d):
    """Check a diagram and return a list of violation strings (empty = ok).

    Checks: tree shape and blowup order, proximity cardinality and targets,
    the proximity inequality for total multiplicities, minimality (every
    point lies on the curve), per-branch proximity equality, and
    SNC-completeness (every branch is resolved down to multiplicity 1).
    """
    out = []
    pts = d.points
    for idx, p in enumerate(pts):
        if p.id != idx:
            out.append(f"point order: id {p.id} at position {idx}")
    if pts:
        if pts[0].parent is not None:
            out.append("tree shape: first point is not a root")
        for p in pts[1:]:
            if p.parent is None:
                out.append(f"tree shape: point {p.id} is a second root")
            elif not (0 <= p.parent < p.id):
                out.append(f"tree shape: point {p.id} has parent {p.parent} not earlier")
    for p in pts:
        if p.extra is not None:
            if not (0 <= p.extra < p.id):
                out.append(f"proximity: point {p.id} extra target {p.extra} not earlier")
            elif p.parent is None or p.extra == p.parent:
                out.append(f"proximity: point {p.id} extra target equals its parent")
            elif p.extra not in d.ancestors(p.parent):
                out.append(
                    f"proximity: point {p.id} extra target {p.extra} is not an "
                    f"ancestor of its parent"
                )
    if out:
        return out  # structural damage; the remaining checks assume a tree

    # proximity inequality for total multiplicities
    for p in pts:
        m = d.total_mult(p.id)
        s = sum(d.total_mult(q) for q in d.proximate_to(p.id))
        if m < s:
            out.append(
                f"proximity inequality: point {p.id} has multiplicity {m} < {s} "
                f"(sum over proximate points)"
            )

    # minimality: every point lies on the strict transform of the curve
    on_curve = set()
    for b in d.branches:
        on_curve.update(b.path)
    for p in pts:
        if p.id not in on_curve:
            out.append(f"minimality: point {p.id} lies on no branch of the curve")

    # branch paths: chains from the root; SNC-completeness; proximity equality
    for b in d.branches:
        if not b.path:
            if pts:
                out.append(f"branch {b.name}: empty path")
            continue
        if any(not (0 <= pid < len(pts)) for pid in b.path):
            out.append(f"branch {b.name}: path leaves the diagram")
            continue
        if b.path[0] != 0:
            out.append(f"branch {b.name}: path does not start at the root")
        for u, v in zip(b.path, b.path[1:]):
            if pts[v].parent != u:
                out.append(f"branch {b.name}: path {u}->{v} is not a parent link")
        if len(b.mults) != len(b.path):
            out.append(f"branch {b.name}: multiplicity list does not match its path")
            continue
        if b.mults[-1] != 1:
            out.append(
                f"SNC-completeness: branch {b.name} ends with multiplicity "
                f"{b.mults[-1]} (not resolved)"
            )
        pos = {pid: i for i, pid in enumerate(b.path)}
        for i, pid in enumerate(b.path):
            s = sum(
                b.mults[pos[q]]
                for q in d.proximate_to(pid)
                if q in pos
            )
            if i < len(b.path) - 1:
                if b.mults[i] != s:
                    out.append(
                        f"branch {b.name}: proximity equality fails at point {pid} "
                        f"({b.mults[i]} != {s})"
                    )
            elif b.mults[i] < s:
                out.append(
                    f"branch {b.name}: proximity inequality fails at terminal {pid}"
                )
        if b.char is not None:
            seq = multiplicity_sequence(b.char)
            want_m = [e.mult for e in seq]
            want_k = [e.extra for e in seq]
            got_m = list(b.mults[: len(seq)])
            got_k = [
                None if pts[pid].extra is None else pos.get(pts[pid].extra, -1)
                for pid in b.path[: len(seq)]
            ]
            if len(b.path) < len(seq) or want_m != got_m or want_k != got_k:
                out.append(
                    f"branch {b.name}: path does not realize its characteristic "
                    f"exponents {b.char}"
                )
    return out
