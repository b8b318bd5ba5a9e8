"""Outcome of one diagram check and its one-line text form."""

import re
from typing import Dict, Iterable, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from ..types import CheckMode, ParseError

_LINE = re.compile(
    r"^DIAGRAM (?P<id>\S+) (?P<outcome>pass|fail) checked=(?P<checked>\d+) "
    r"mode=(?P<mode>exhaustive|sampled)(?: seed=(?P<seed>0x[0-9a-fA-F]+))?"
    r"(?: witness=(?P<input>[^:]*):(?P<left>.*)!=(?P<right>.*))?$"
)


class Witness(BaseModel):
    """An input on which the two paths of a diagram disagree."""
    input: str
    left: str
    right: str

    model_config = {'frozen': True}

    @model_validator(mode='after')
    def _paths_differ(self) -> 'Witness':
        if self.left == self.right:
            raise ValueError('a witness must record two different path results')
        return self

    def __str__(self) -> str:
        return f"{self.input}:{self.left}!={self.right}"


class LawReport(BaseModel):
    """Result of checking one commuting diagram.

    ``negative`` marks diagrams expected to fail; for those a failure is
    the good outcome.
    """
    diagram_id: str = Field(pattern=r"^\S+$")
    passed: bool
    cases_checked: int = Field(ge=0)
    mode: CheckMode
    seed: Optional[int] = None
    witness: Optional[Witness] = None
    negative: bool = False

    model_config = {'frozen': True}

    @model_validator(mode='after')
    def _consistent(self) -> 'LawReport':
        if self.passed and self.witness is not None:
            raise ValueError('a passing report cannot carry a witness')
        if self.mode == CheckMode.SAMPLED and self.seed is None:
            raise ValueError('a sampled report must record its seed')
        return self

    @property
    def subject(self) -> str:
        """What the diagram is about: the id up to the first "[" or "."."""
        return re.split(r"[.\[]", self.diagram_id, maxsplit=1)[0]

    def to_line(self) -> str:
        parts = [
            "DIAGRAM",
            self.diagram_id,
            "pass" if self.passed else "fail",
            f"checked={self.cases_checked}",
            f"mode={self.mode.value}",
        ]
        if self.mode == CheckMode.SAMPLED:
            parts.append(f"seed={self.seed:#x}")
        if self.witness is not None:
            parts.append(f"witness={self.witness}")
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str, negative: bool = False) -> 'LawReport':
        """Parse the output of :meth:`to_line`.

        The line does not say whether failure was expected; pass
        ``negative`` for diagrams of a negative subject.

        Raises:
            ParseError: if the line is not a report line
        """
        match = _LINE.match(line.strip())
        if match is None:
            raise ParseError(f"not a report line: {line.strip()!r}")
        witness = None
        if match.group('input') is not None:
            witness = Witness(
                input=match.group('input'),
                left=match.group('left'),
                right=match.group('right'),
            )
        seed = match.group('seed')
        return cls(
            diagram_id=match.group('id'),
            passed=match.group('outcome') == 'pass',
            cases_checked=int(match.group('checked')),
            mode=CheckMode(match.group('mode')),
            seed=int(seed, 16) if seed else None,
            witness=witness,
            negative=negative,
        )


def _tally(reports: Iterable[LawReport]) -> Tuple[int, Dict[str, bool]]:
    """Failed expected-pass diagrams, and whether each negative subject failed somewhere."""
    negative_subjects: Dict[str, bool] = {}
    failed = 0
    for report in reports:
        if report.negative:
            seen = negative_subjects.get(report.subject, False)
            negative_subjects[report.subject] = seen or not report.passed
        elif not report.passed:
            failed += 1
    return failed, negative_subjects


def suite_succeeded(reports: Iterable[LawReport]) -> bool:
    """Every expected-pass diagram passed and every negative subject failed somewhere."""
    failed, negative_subjects = _tally(reports)
    return failed == 0 and all(negative_subjects.values())


def summary_line(reports: Iterable[LawReport]) -> str:
    """``SUMMARY <pass|fail> diagrams=<n> unexpected=<k> expect-fail=<subjects>``.

    ``unexpected`` counts expected-pass diagrams that failed plus negative
    subjects that never failed.
    """
    reports = list(reports)
    failed, negative_subjects = _tally(reports)
    unexpected = failed + sum(1 for hit in negative_subjects.values() if not hit)
    outcome = "pass" if unexpected == 0 else "fail"
    subjects = ",".join(negative_subjects) or "-"
    return f"SUMMARY {outcome} diagrams={len(reports)} unexpected={unexpected} expect-fail={subjects}"


def merge_reports(diagram_id: str, reports: Iterable[LawReport]) -> LawReport:
    """Fold reports over several subjects into one diagram.

    Case counts add up; the first failing report supplies the witness.
    All parts must share a mode.
    """
    reports = list(reports)
    if not reports:
        raise ValueError(f"{diagram_id}: nothing to merge")
    modes = {r.mode for r in reports}
    if len(modes) != 1:
        raise ValueError(f"{diagram_id}: cannot merge {sorted(m.value for m in modes)} reports")
    failed = next((r for r in reports if not r.passed), None)
    return LawReport(
        diagram_id=diagram_id,
        passed=failed is None,
        cases_checked=sum(r.cases_checked for r in reports),
        mode=reports[0].mode,
        seed=reports[0].seed,
        witness=failed.witness if failed is not None else None,
        negative=reports[0].negative,
    )
