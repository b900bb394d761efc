r"""Command-line surface.

Subcommands:

* ``resolve``   - divisors of the minimal embedded resolution with their
                  pullback orders, canonical orders, self-intersections and
                  valences;
* ``jump``      - the jumping numbers in (0, bound] with critical and
                  contributing divisors;
* ``relevance`` - the relevance table (valence criterion) with witnessed
                  contributed numbers, and the log canonical threshold's
                  contribution record;
* ``oracle``    - the Newton-polygon jump set of a nondegenerate polynomial
                  (refuses degenerate input);
* ``graph``     - the dual graph of the resolution in DOT format.

Input is exactly one of ``--poly`` (polynomial text), ``--branches`` (JSON
with characteristic exponents and contacts), or ``--diagram`` (JSON with
explicit points and branch paths).  Rationals are rendered as "p/q" in
both text and JSON output, never as floats.

Exit codes: 0 success, 1 input error, 2 violated internal invariant (the
latter indicates a bug, never expected behavior).
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from .branch import BranchError, CharExponents
from .cluster import (
    DiagramBuildError,
    EnriquesDiagram,
    InvariantViolation,
    validate,
)
from .jumping import (
    antinef_closure,
    contribution_report,
    jumping_numbers,
    multiplier_vector,
)
from .oracle import DegenerateCurveError, oracle_jumping_numbers
from .puiseux import ParseError, PuiseuxError, parse, puiseux_branches, to_diagram
from .resolution import dual_graph, resolve, to_dot
from .cluster import build_diagram


class InputError(ValueError):
    pass


def _parse_rational(text):
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def _rat(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _load_branch_file(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read branch file {path}: {exc}") from exc
    try:
        branches = [
            (CharExponents(tuple(b["char_exponents"])), int(b.get("multiplicity", 1)))
            for b in data["branches"]
        ]
        names = [str(b["name"]) for b in data["branches"]]
    except (KeyError, TypeError, BranchError) as exc:
        raise InputError(f"malformed branch file: {exc}") from exc
    idx = {n: i for i, n in enumerate(names)}
    contacts = {}
    for entry in data.get("contacts", []):
        try:
            n1, n2 = entry["pair"]
            contacts[(idx[str(n1)], idx[str(n2)])] = int(entry["shared_points"])
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"malformed contact entry {entry}: {exc}") from exc
    return branches, contacts, names


def _load_diagram_file(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read diagram file {path}: {exc}") from exc
    return EnriquesDiagram.from_dict(data)


def _diagram_from_args(args):
    sources = [s for s in (args.poly, args.branches, args.diagram) if s is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of --poly, --branches, --diagram")
    if args.poly is not None:
        branches = puiseux_branches(parse(args.poly), ext_depth=args.ext_depth)
        return to_diagram(branches)
    if args.branches is not None:
        branches, contacts, names = _load_branch_file(args.branches)
        return build_diagram(branches, contacts=contacts, names=names)
    d = _load_diagram_file(args.diagram)
    problems = validate(d)
    if problems:
        raise InputError("invalid diagram: " + "; ".join(problems))
    return d


# ---------------------------------------------------------------------------
# command payloads (dictionaries; text and json are renderings of the same data)


def _resolve_payload(r):
    rows = []
    n = r.nexc()
    for i in range(n):
        rows.append(
            {
                "divisor": r.exc_names[i],
                "a": r.a_exc[i],
                "k": r.k_exc[i],
                "self": r.matrix[i][i],
                "valence": r.valence[i],
            }
        )
    strict = [
        {"component": name, "coefficient": r.a_strict[bi]}
        for bi, name in enumerate(r.strict_names)
    ]
    return {"exceptional": rows, "strict": strict}


def _jump_payload(r, bound):
    rep = jumping_numbers(r, bound)
    return rep.to_dict()


def _relevance_payload(r, bound):
    rep = jumping_numbers(r, bound)
    payload = {
        "relevance": [row.to_dict() for row in rep.relevance],
        "lct": _rat(rep.lct) if rep.lct is not None else None,
    }
    if rep.lct is not None:
        rec = contribution_report(r, rep.lct)
        payload["lct_record"] = rec.to_dict()
    return payload


def _render_text(payload, command):
    lines = []
    if command == "resolve":
        lines.append("divisor   a     k     self  valence")
        for row in payload["exceptional"]:
            lines.append(
                f"{row['divisor']:<8}{row['a']:<6}{row['k']:<6}"
                f"{row['self']:<6}{row['valence']}"
            )
        for row in payload["strict"]:
            lines.append(f"{row['component']:<8}coefficient {row['coefficient']}")
    elif command == "jump":
        lines.append(f"log canonical threshold: {payload['lct'] or '(none below the bound)'}")
        lines.append("jumping numbers in (0, " + payload["bound"] + "]:")
        for rec in payload["jumping_numbers"]:
            contrib = ",".join(rec["contributing"]) or "-"
            crit = ",".join(rec["critical"])
            lines.append(f"  {rec['lambda']:<8} critical {{{crit}}}  contributing {{{contrib}}}")
        lines.append("relevance:")
        for row in payload["relevance"]:
            wit = row["witness"] if row["witness"] is not None else "-"
            flag = "relevant" if row["relevant"] else "irrelevant"
            lines.append(
                f"  {row['divisor']:<6} valence {row['valence']}  {flag:<12} witness {wit}"
            )
    elif command == "relevance":
        lines.append(f"log canonical threshold: {payload['lct'] or '(none below the bound)'}")
        if "lct_record" in payload:
            rec = payload["lct_record"]
            contrib = ",".join(rec["contributing"]) or "no single contributor"
            crit = ",".join(rec["critical"])
            lines.append(f"  at lct: {contrib}; critical set {{{crit}}}")
        for row in payload["relevance"]:
            wit = row["witness"] if row["witness"] is not None else "-"
            flag = "relevant" if row["relevant"] else "irrelevant"
            lines.append(
                f"  {row['divisor']:<6} valence {row['valence']}  {flag:<12} witness {wit}"
            )
    elif command == "oracle":
        lines.append("newton-polygon jumping numbers below 1:")
        lines.append("  " + (", ".join(payload["jumping_numbers"]) or "(none)"))
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="curvejump",
        description="Exact jumping numbers and relevant exceptional divisors "
        "of plane curve singularities (one germ at the origin; a global "
        "curve's jump set is the union over its singular points).",
    )
    ap.add_argument("command", choices=["resolve", "jump", "relevance", "oracle", "graph"])
    ap.add_argument("--poly", help="polynomial text, e.g. 'x^4 - y^3'")
    ap.add_argument("--branches", help="JSON branch file (char exponents + contacts)")
    ap.add_argument("--diagram", help="JSON diagram file (points + branch paths)")
    ap.add_argument("--bound", default="1", help="scan bound as P/Q (default 1)")
    ap.add_argument("--format", choices=["text", "json"], default="text")
    ap.add_argument("--ext-depth", type=int, default=2, dest="ext_depth",
                    help="extension tower depth limit for the expansion")
    ap.add_argument("--seed", type=int, default=None,
                    help="randomize the unloading pick order (results are "
                    "order-independent; exercised by the property suites)")
    args = ap.parse_args(argv)

    try:
        bound = _parse_rational(args.bound)
        if bound <= 0:
            raise InputError("--bound must be positive")
        if args.command == "oracle":
            if args.poly is None:
                raise InputError("the oracle needs --poly")
            f = parse(args.poly)
            top = min(bound, Fraction(10**12 - 1, 10**12))
            values = oracle_jumping_numbers(f, top)
            payload = {"jumping_numbers": [_rat(v) for v in values]}
            out = (
                json.dumps(payload, indent=2) + "\n"
                if args.format == "json"
                else _render_text(payload, "oracle")
            )
            sys.stdout.write(out)
            return 0

        diagram = _diagram_from_args(args)
        if args.command == "graph":
            sys.stdout.write(to_dot(dual_graph(diagram)))
            return 0
        r = resolve(diagram)
        if args.seed is not None:
            # run one randomized unloading pass; closures are order-independent
            rng = random.Random(args.seed)
            vec = multiplier_vector(r, bound, "at")
            antinef_closure(r, vec, pick=rng.choice)
        if args.command == "resolve":
            payload = _resolve_payload(r)
        elif args.command == "jump":
            payload = _jump_payload(r, bound)
        else:
            payload = _relevance_payload(r, bound)
        out = (
            json.dumps(payload, indent=2) + "\n"
            if args.format == "json"
            else _render_text(payload, args.command)
        )
        sys.stdout.write(out)
        return 0
    except (InputError, ParseError, PuiseuxError, DiagramBuildError, BranchError,
            DegenerateCurveError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except InvariantViolation as exc:
        sys.stderr.write(f"internal invariant violated: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
