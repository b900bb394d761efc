r"""curvejump: exact jumping numbers of plane curve singularities.

The pipeline: parse a polynomial (or take combinatorial branch data), run
a rational Newton-Puiseux expansion into analytic branches, assemble the
Enriques diagram of the minimal embedded resolution, compute its numerical
lattice (pullback orders, canonical orders, intersection matrix, valences),
and scan for jumping numbers via antinef closures of multiplier-ideal
vectors.  An independent Newton-polygon oracle cross-checks the engine on
nondegenerate input.  Everything is exact rational/integer arithmetic.
"""

from .arith import (
    QQ,
    ExtensionDepthError,
    SimpleExtension,
    UniPoly,
    ext_reduce,
    factor_over,
    factor_rational,
    floor_scale,
    squarefree_part,
)
from .branch import (
    BranchError,
    CharExponents,
    Semigroup,
    branch_intersection,
    characteristic_exponents_from_multiplicities,
    multiplicity_sequence,
    semigroup,
)
from .cluster import (
    DiagramBuildError,
    DiagramBranch,
    EnriquesDiagram,
    InvariantViolation,
    Point,
    build_diagram,
    validate,
)
from .jumping import (
    DivisorVector,
    JumpRecord,
    JumpReport,
    antinef_closure,
    candidates,
    contributes,
    contribution_report,
    is_jumping,
    jumping_numbers,
    multiplier_vector,
    relevant,
    skoda_shift,
)
from .oracle import (
    DegenerateCurveError,
    NewtonPolygon,
    monomial_threshold,
    nondegenerate,
    oracle_jumping_numbers,
    polygon,
)
from .polynomials import BivarPoly
from .puiseux import (
    BranchResult,
    CurveInput,
    ParseError,
    PuiseuxError,
    parse,
    puiseux_branches,
    to_diagram,
)
from .resolution import (
    ResolutionData,
    canonical_orders,
    dual_graph,
    intersection_matrix,
    is_negative_definite,
    pullback_orders,
    resolve,
    to_dot,
    valences,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
