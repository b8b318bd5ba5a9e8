import pytest
from pydantic import ValidationError

from alternata.harness import LawReport, Witness, merge_reports, suite_succeeded, summary_line
from alternata.types import CheckMode, ParseError


def report(diagram_id, passed=True, negative=False, mode=CheckMode.EXHAUSTIVE, seed=None, cases=3):
    witness = None if passed else Witness(input="x", left="1", right="0")
    return LawReport(
        diagram_id=diagram_id, passed=passed, cases_checked=cases,
        mode=mode, seed=seed, witness=witness, negative=negative,
    )


def test_line_format():
    line = report("alt[X1].left-unit").to_line()
    assert line == "DIAGRAM alt[X1].left-unit pass checked=3 mode=exhaustive"
    failing = report("cnf-exact.naturality[X=3,Y=2]", passed=False, negative=True,
                     mode=CheckMode.SAMPLED, seed=0xC0A1)
    assert failing.to_line() == (
        "DIAGRAM cnf-exact.naturality[X=3,Y=2] fail checked=3 mode=sampled seed=0xc0a1 "
        "witness=x:1!=0"
    )


def test_line_parses_back():
    original = LawReport(
        diagram_id="pp-atleast[X2].left-unit", passed=False, cases_checked=7,
        mode=CheckMode.SAMPLED, seed=17, negative=True,
        witness=Witness(input="{{0},{1}}", left="{{0},{0,1},{1}}", right="{{0},{1}}"),
    )
    assert "expect" not in original.to_line()
    assert LawReport.from_line(original.to_line(), negative=True) == original
    assert not LawReport.from_line(original.to_line()).negative


def test_rejects_other_lines():
    with pytest.raises(ParseError):
        LawReport.from_line("DIAGRAM x maybe checked=1 mode=exhaustive")


def test_consistency_rules():
    with pytest.raises(ValidationError):
        LawReport(diagram_id="x", passed=True, cases_checked=1, mode=CheckMode.SAMPLED)
    with pytest.raises(ValidationError):
        LawReport(diagram_id="x y", passed=True, cases_checked=1, mode=CheckMode.EXHAUSTIVE)
    with pytest.raises(ValidationError):
        LawReport(
            diagram_id="x", passed=True, cases_checked=1, mode=CheckMode.EXHAUSTIVE,
            witness=Witness(input="i", left="a", right="b"),
        )
    with pytest.raises(ValidationError):
        Witness(input="i", left="a", right="a")


@pytest.mark.parametrize("diagram_id,subject", [
    ("cnf-exact.naturality[n<=3]", "cnf-exact"),
    ("pp-atleast[X2].left-unit", "pp-atleast"),
    ("lemma", "lemma"),
])
def test_subject(diagram_id, subject):
    assert report(diagram_id).subject == subject


def test_suite_outcome():
    assert suite_succeeded([report("a.b"), report("n[X1].l", passed=False, negative=True)])
    assert not suite_succeeded([report("a.b", passed=False)])
    # every negative subject needs at least one failure
    assert not suite_succeeded([report("n[X1].l", negative=True), report("n[X1].r", negative=True)])
    assert suite_succeeded([
        report("n[X1].l", negative=True),
        report("n[X2].l", passed=False, negative=True),
    ])
    assert suite_succeeded([])


def test_merge():
    merged = merge_reports("all", [report("a"), report("b", passed=False), report("c", cases=5)])
    assert merged.diagram_id == "all"
    assert not merged.passed
    assert merged.cases_checked == 11
    assert str(merged.witness) == "x:1!=0"
    with pytest.raises(ValueError):
        merge_reports("none", [])
    with pytest.raises(ValueError):
        merge_reports("mixed", [report("a"), report("b", mode=CheckMode.SAMPLED, seed=1)])


def test_summary_line():
    reports = [
        report("alt[X1].left-unit"),
        report("cnf-exact.naturality[n<=3]", passed=False, negative=True),
        report("pp-atleast[X1].left-unit", negative=True),
        report("pp-atleast[X2].left-unit", passed=False, negative=True),
    ]
    assert summary_line(reports) == "SUMMARY pass diagrams=4 unexpected=0 expect-fail=cnf-exact,pp-atleast"
    broken = reports[:3] + [report("alt[X2].associativity", passed=False)]
    assert summary_line(broken) == "SUMMARY fail diagrams=4 unexpected=2 expect-fail=cnf-exact,pp-atleast"
    assert summary_line([report("up[X0].left-unit")]) == "SUMMARY pass diagrams=1 unexpected=0 expect-fail=-"
