"""Python bindings for the casekit safety-case assessment core.

Cases, assessments and results cross the boundary as JSON; this module
accepts and returns plain Python objects.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Optional

from . import _casekit
from ._casekit import CasekitError

__all__ = [
    "CasekitError",
    "canonicalize",
    "case_digest",
    "validate",
    "score_evidence",
    "rollup",
    "lint",
    "rubric_text",
    "report_markdown",
    "radar_svg",
]


def _text(doc: Any) -> str:
    return doc if isinstance(doc, str) else json.dumps(doc)


def _records(assessments: Optional[Iterable[dict] | str]) -> str:
    if assessments is None:
        return ""
    if isinstance(assessments, str):
        return assessments
    return json.dumps(list(assessments))


def canonicalize(case: Any) -> str:
    """Canonical JSON text of a case (str or dict)."""
    return _casekit.canonicalize(_text(case))


def case_digest(case: Any) -> str:
    return _casekit.case_digest(_text(case))


def validate(case: Any) -> list[dict]:
    """Structural violations; an empty list means the case is valid."""
    return [
        {"code": code, "location": location, "message": message}
        for code, location, message in _casekit.validate(_text(case))
    ]


def score_evidence(case: Any, as_of: str) -> dict:
    return json.loads(_casekit.score_evidence(_text(case), as_of))


def rollup(
    case: Any,
    assessments=None,
    strategy: str = "conservative_min",
    threshold: int = 2,
    weights: Optional[dict] = None,
    overrides: Optional[list] = None,
) -> dict:
    return json.loads(
        _casekit.rollup(
            _text(case),
            _records(assessments),
            strategy,
            threshold,
            json.dumps(weights) if weights is not None else "",
            json.dumps(overrides) if overrides is not None else "",
        )
    )


def lint(case: Any, assessments=None) -> list[dict]:
    out = _casekit.lint(_text(case), _records(assessments))
    return [json.loads(line) for line in out.splitlines() if line]


def rubric_text(dimension: str, level: int) -> tuple[str, str]:
    """(title, guidance) for one rubric cell."""
    return _casekit.rubric_text(dimension, level)


def report_markdown(case: Any, assessments, as_of: str, actions: Optional[list] = None) -> str:
    return _casekit.report_markdown(
        _text(case), _records(assessments), as_of, json.dumps(actions) if actions is not None else ""
    )


def radar_svg(case: Any, assessments=None, strategy: str = "conservative_min") -> str:
    return _casekit.radar_svg(_text(case), _records(assessments), strategy)
