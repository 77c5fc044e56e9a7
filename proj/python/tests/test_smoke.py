import json
import os
from pathlib import Path

import pytest

import mmm

SOURCE_DIR = Path(os.environ.get("MMM_SOURCE_DIR", Path(__file__).resolve().parents[2]))


def test_fixture_round_trip():
    fixture = mmm.case_study_fixture()
    text = mmm.serialize_model(fixture)
    assert mmm.parse_model(text) == fixture
    assert text == (SOURCE_DIR / "fixtures" / "case-study.pmodel").read_text()
    assert mmm.validate_model(fixture) == []


def test_dsm_and_triangulation():
    dsm = mmm.build_dsm(mmm.case_study_fixture())
    assert dsm.mark_count() == 14
    above = [(e.target, e.source) for e in mmm.feedback_entries(dsm)]
    assert above == [("D", "F"), ("H", "J"), ("I", "K")]
    assert mmm.find_original_activities(dsm) == ["A", "G", "J", "M"]
    assert mmm.find_destination_activities(dsm) == ["H", "N"]

    tri = mmm.triangulate(dsm)
    assert tri.cycles == [["D", "E", "F"], ["I", "K"]]
    levels = mmm.assign_levels(tri, dsm)
    assert sorted(a for a, l in levels.items() if l == 2) == ["B", "I", "K", "L"]


def test_ism_and_clusters():
    model = mmm.case_study_fixture()
    ism = mmm.build_ism(model)
    assert [ism.mark("H", i) for i in (7, 9, 12, 18)] == ["C", "I", "O", "I"]
    reduced = mmm.reduce_ism(ism)
    assert len(reduced.cols) == 15
    clustering = mmm.cluster_reduced_ism(reduced)
    assert [sp.activities for sp in clustering.subprocesses][1] == ["G", "I", "K"]
    pairs = mmm.detect_interdependencies(reduced)
    assert [(p.pair, p.via) for p in pairs] == [(("I", "K"), (13, 15))]


def test_analyze_exports_match_golden_files():
    analysis = mmm.analyze(mmm.case_study_fixture())
    exports = analysis.exports()
    for name, text in exports.items():
        assert text == (SOURCE_DIR / "tests" / "golden" / name).read_text(), name
    assert json.loads(exports["mmm.json"])["metrics"] == {
        "entry_count": 2,
        "max_level_distance": 0,
        "total_level_distance": 0,
    }


def test_errors_carry_codes():
    with pytest.raises(mmm.MmmError) as info:
        mmm.parse_model("name: x\nactivities: [A]\ndependencies:\n  - {id: 1, source: A, target: Q, kind: io}\n")
    assert info.value.code == "unknown-endpoint"

    with pytest.raises(mmm.MmmError) as info:
        mmm.cluster_reduced_ism(mmm.build_ism(mmm.case_study_fixture()))
    assert info.value.code == "control-column-present"


def test_build_model_from_python():
    model = mmm.ProcessModel(
        "tiny",
        ["a", "b"],
        [mmm.Dependency(1, "a", "b"), mmm.Dependency(2, target="a", kind="control")],
    )
    assert model.activities == ["A", "B"]
    assert mmm.build_dsm(model, ["B", "A"]).to_matrix() == [[0, 1], [0, 0]]
    with pytest.raises(mmm.MmmError):
        mmm.build_dsm(model, ["A"])
