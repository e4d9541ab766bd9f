import json

import pytest

import _tancat as tc

LINE3 = json.dumps({"rig": "Q", "generators": ["t"], "relations": ["t^3"]})

SQUARE_MAP = json.dumps({"rig": "Q", "src": 1, "dst": 1, "components": ["x1^2"]})
LINEAR_MAP = json.dumps(
    {"rig": "Q", "src": 2, "dst": 2, "components": ["x1 + 2*x2", "x2"]}
)

SQUARE_DIAGRAM = json.dumps(
    {
        "index": {
            "objects": ["0", "1"],
            "arrows": [{"name": "f", "src": "0", "dst": "1"}],
            "relations": [],
        },
        "base": "APoly",
        "objects": {
            "0": {"rig": "Q", "arity": 1},
            "1": {"rig": "Q", "arity": 1},
        },
        "arrows": {
            "f": {"rig": "Q", "src": 1, "dst": 1, "components": ["x1^2"]}
        },
    }
)


def all_pass(report):
    return all(ok for _, ok, _ in report)


def test_tangent_presentation():
    doc = json.loads(tc.tangent(LINE3))
    assert doc["generators"] == ["t", "d_t"]
    assert doc["relations"] == ["t^3", "3*d_t*t^2"]


def test_second_tangent_generators():
    doc = json.loads(tc.tangent2(LINE3))
    assert doc["generators"] == ["t", "d_t", "e_t", "e_d_t"]


def test_structure_maps_table():
    maps = tc.structure_maps(LINE3)
    assert sorted(maps) == ["add", "gamma", "q", "v", "zeta"]
    assert maps["q"]["t"] == "t"
    assert maps["zeta"]["d_t"] == "0"


def test_zariski_axioms_pass():
    report = tc.check_zariski(LINE3)
    assert len(report) == 24
    assert all_pass(report)
    assert all_pass(tc.check_zariski(LINE3, truncate_jets=True))


def test_differentiate_square():
    doc = json.loads(tc.differentiate(SQUARE_MAP))
    assert doc == {"rig": "Q", "src": 2, "dst": 1, "components": ["2*x1*y1"]}


def test_dlinear_split():
    assert tc.dlinear(LINEAR_MAP)
    assert not tc.dlinear(SQUARE_MAP)


def test_check_cd_axioms():
    report = tc.check_cd(rig="Q", samples=25, seed=5)
    assert len(report) == 7
    assert all_pass(report)


def test_check_tangent_axioms():
    assert all_pass(tc.check_tangent(arity=1, samples=5, seed=1))


def test_weil_presentation():
    doc = json.loads(tc.weil("W[1,2]"))
    assert doc["rig"] == "N"
    assert doc["generators"] == ["x", "y1", "y2"]


def test_weil_hom_examples():
    assert tc.weil_hom("W[1]", "W[1]", {"x": "2*x"})
    assert not tc.weil_hom("W[1]", "W[1]", {"x": "x + 1"})
    assert not tc.weil_hom("W[1]", "W[1,1]", {"x": "x + y"})


def test_ind_tangent_doubles_arity():
    doc = json.loads(tc.ind_tangent(SQUARE_DIAGRAM))
    assert doc["objects"]["0"]["arity"] == 2
    assert doc["arrows"]["f"]["components"] == ["2*x1*x2", "x2^2"]


def test_diff_object_split():
    verdict, witness = tc.diff_object(SQUARE_DIAGRAM)
    assert not verdict
    assert witness == "f"


def test_check_ind_axioms():
    report = tc.check_ind(SQUARE_DIAGRAM)
    assert len(report) == 43
    assert all_pass(report)


def test_spf_rendering():
    assert tc.spf(2).splitlines() == [
        "level 1: ring Q[t]/(t), tangent Q[t, d_t]/(t, d_t)",
        "level 2: ring Q[t]/(t^2), tangent Q[t, d_t]/(t^2, 2*d_t*t)",
    ]


def test_member_split():
    assert tc.member(LINE3, "t^4")
    assert not tc.member(LINE3, "t^2")


def test_bad_document_raises():
    with pytest.raises(ValueError):
        tc.tangent(json.dumps({"rig": "Q"}))
