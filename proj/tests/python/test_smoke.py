import json
import pathlib

import pytest

casekit = pytest.importorskip("casekit")

ROOT = pathlib.Path(__file__).resolve().parents[2]
FIXTURE = (ROOT / "fixtures" / "acceptance_criterion.case.json").read_text()
ASSESSMENTS = json.loads((ROOT / "fixtures" / "demo.assessments.json").read_text())
ACTIONS = json.loads((ROOT / "fixtures" / "demo.actions.json").read_text())
AS_OF = "2025-06-30"


def test_fixture_is_canonical_and_valid():
    assert casekit.canonicalize(FIXTURE) == FIXTURE
    assert casekit.canonicalize(json.loads(FIXTURE)) == FIXTURE
    assert casekit.validate(FIXTURE) == []
    assert len(casekit.case_digest(FIXTURE)) == 64


def test_invalid_case_reports_violations():
    doc = json.loads(FIXTURE)
    doc["claims"] = [c for c in doc["claims"] if c["id"] != "AC1"]
    codes = {v["code"] for v in casekit.validate(doc)}
    assert codes
    with pytest.raises(casekit.CasekitError):
        casekit.canonicalize(doc)


def test_evidence_scores():
    lib = casekit.score_evidence(FIXTURE, AS_OF)
    assert lib["counts"] == {"0": 1, "1": 5, "2": 3, "3": 3}


def test_rollup_strategies():
    mn = casekit.rollup(FIXTURE, ASSESSMENTS)
    wm = casekit.rollup(FIXTURE, ASSESSMENTS, strategy="weighted_mean")
    assert mn["strategy"] == "conservative_min"
    assert wm["strategy"] == "weighted_mean"
    assert mn["low_score_register"] == wm["low_score_register"]
    with pytest.raises(casekit.CasekitError) as err:
        casekit.rollup(FIXTURE, ASSESSMENTS, strategy="median")
    assert err.value.code == "UNKNOWN_STRATEGY"


def test_rubric_and_lint():
    title, guidance = casekit.rubric_text("procedural", 0)
    assert title == "Insufficient Support"
    assert guidance == (ROOT / "tests" / "fixtures" / "rubric" / "procedural_0.txt").read_text()
    rules = {f["rule"] for f in casekit.lint(FIXTURE)}
    assert "L-KIND-GAP" in rules


def test_report_and_radar_match_goldens():
    golden = ROOT / "tests" / "golden"
    assert casekit.report_markdown(FIXTURE, ASSESSMENTS, AS_OF, ACTIONS) == (golden / "demo_report.md").read_text()
    assert casekit.radar_svg(FIXTURE, ASSESSMENTS) == (golden / "demo_radar.svg").read_text()
