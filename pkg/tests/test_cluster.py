"""Enriques diagram building and validation."""

import random

import pytest

from curvejump.branch import CharExponents, multiplicity_sequence
from curvejump.cluster import (
    DiagramBranch,
    DiagramBuildError,
    EnriquesDiagram,
    Point,
    build_diagram,
    validate,
)

from corpus import diagram_corpus, random_diagram


def test_cusp34_diagram():
    d = build_diagram([(CharExponents((3, 4)), 1)])
    assert [(p.parent, p.extra) for p in d.points] == [
        (None, None),
        (0, None),
        (1, 0),
        (2, 0),
    ]
    assert [d.total_mult(i) for i in range(4)] == [3, 1, 1, 1]
    assert validate(d) == []


def test_two_cusps_diagram():
    d = build_diagram(
        [(CharExponents((2, 3)), 1), (CharExponents((2, 3)), 1)], contacts={(0, 1): 1}
    )
    assert d.npoints() == 5
    assert d.total_mult(0) == 4
    assert [d.total_mult(i) for i in range(1, 5)] == [1, 1, 1, 1]
    # blowup (level) order: first both depth-1 points, then the two satellites
    assert [b.path for b in d.branches] == [(0, 1, 3), (0, 2, 4)]
    assert validate(d) == []


def test_node_diagram():
    d = build_diagram([(CharExponents((1,)), 1), (CharExponents((1,)), 1)])
    assert d.npoints() == 1 and d.total_mult(0) == 2
    assert validate(d) == []


def test_tangent_smooth_pair():
    d = build_diagram(
        [(CharExponents((1,)), 1), (CharExponents((1,)), 1)], contacts={(0, 1): 2}
    )
    assert d.npoints() == 2
    assert [d.total_mult(i) for i in range(2)] == [2, 2]
    assert validate(d) == []


def test_non_reduced_coefficients():
    d = build_diagram([(CharExponents((2, 3)), 2)])
    assert [d.total_mult(i) for i in range(3)] == [4, 2, 2]
    assert validate(d) == []


def test_rejects_satellite_mismatch():
    with pytest.raises(DiagramBuildError):
        build_diagram(
            [(CharExponents((2, 3)), 1), (CharExponents((1,)), 1)],
            contacts={(0, 1): 3},
        )


def test_rejects_parting_at_forced_satellite():
    with pytest.raises(DiagramBuildError):
        build_diagram(
            [(CharExponents((2, 3)), 1), (CharExponents((2, 3)), 1)],
            contacts={(0, 1): 2},
        )


def test_rejects_tree_violation():
    with pytest.raises(DiagramBuildError):
        build_diagram(
            [(CharExponents((1,)), 1)] * 3,
            contacts={(0, 1): 3, (0, 2): 2, (1, 2): 1},
        )


def test_rejects_bad_coefficient():
    with pytest.raises(DiagramBuildError):
        build_diagram([(CharExponents((1,)), 0)])


@pytest.mark.parametrize("seed", range(30))
def test_path_extraction_identity(seed):
    # restricting the built diagram to one branch gives back its sequence
    d = random_diagram(random.Random(seed))
    for b in d.branches:
        seq = multiplicity_sequence(b.char)
        assert b.mults[: len(seq)] == tuple(e.mult for e in seq)
        assert all(m == 1 for m in b.mults[len(seq) :])
        pos = {pid: i for i, pid in enumerate(b.path)}
        for i, pid in enumerate(b.path[: len(seq)]):
            extra = d.points[pid].extra
            assert seq[i].extra == (None if extra is None else pos[extra])


def test_root_multiplicity_adds_up():
    rng = random.Random(5)
    for _ in range(20):
        d = random_diagram(rng)
        assert d.total_mult(0) == sum(
            b.coefficient * b.char.beta0 for b in d.branches
        )


def test_random_diagrams_validate():
    for d in diagram_corpus(99, 60):
        assert validate(d) == []


def test_validator_proximity_inequality():
    bad = EnriquesDiagram(
        points=(Point(0, None), Point(1, 0), Point(2, 1, 0), Point(3, 2, 0)),
        branches=(DiagramBranch("C", 1, (0, 1, 2, 3), (1, 1, 1, 1)),),
    )
    assert any("proximity" in v for v in validate(bad))


def test_validator_minimality():
    bad = EnriquesDiagram(
        points=(Point(0, None), Point(1, 0)),
        branches=(DiagramBranch("C", 1, (0,), (1,)),),
    )
    assert any("minimality" in v for v in validate(bad))


def test_validator_snc_completeness():
    # a cusp whose path stops before the satellite: the derived multiplicity
    # data is fine, but declared exponents (2;3) are not realized
    d = build_diagram([(CharExponents((2, 3)), 1)])
    truncated = EnriquesDiagram(
        points=d.points[:2],
        branches=(
            DiagramBranch("C", 1, (0, 1), (2, 1), char=CharExponents((2, 3))),
        ),
    )
    assert any("characteristic exponents" in v for v in validate(truncated))


def test_validator_terminal_multiplicity():
    bad = EnriquesDiagram(
        points=(Point(0, None),),
        branches=(DiagramBranch("C", 1, (0,), (2,)),),
    )
    assert any("SNC" in v for v in validate(bad))


def test_serialization_roundtrip():
    d = build_diagram(
        [(CharExponents((2, 3)), 1), (CharExponents((2, 3)), 1)], contacts={(0, 1): 1}
    )
    d2 = EnriquesDiagram.from_dict(d.to_dict())
    assert validate(d2) == []
    assert [p.id for p in d2.points] == [p.id for p in d.points]
    assert [b.mults for b in d2.branches] == [b.mults for b in d.branches]


def test_from_dict_rejects_bad_ids():
    with pytest.raises(DiagramBuildError):
        EnriquesDiagram.from_dict(
            {"points": [{"id": 0, "parent": None}, {"id": 2, "parent": 0}],
             "branches": []}
        )
