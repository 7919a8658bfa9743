from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

from .polycore import MultiPoly


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    params: Tuple[Any, ...]
    passed: bool
    residual: MultiPoly
    counterexample: Optional[Tuple[Any, ...]] = None
    expected_failure: bool = False
    note: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(self.params))
        if self.passed != self.residual.is_zero:
            raise ValueError("passed must be True exactly when the residual is zero")
        if (self.counterexample is None) != self.passed:
            raise ValueError("a counterexample is required exactly when the check fails")

    @classmethod
    def from_residual(
        cls,
        identity_id: str,
        params: Iterable[Any],
        residual: MultiPoly,
        expected_failure: bool = False,
        note: str = "",
    ) -> "IdentityReport":
        params = tuple(params)
        passed = residual.is_zero
        return cls(
            identity_id=identity_id,
            params=params,
            passed=passed,
            residual=residual,
            counterexample=None if passed else params,
            expected_failure=expected_failure,
            note=note,
        )

    @property
    def unexpected_failure(self) -> bool:
        return not self.passed and not self.expected_failure

    def to_json(self) -> Dict[str, Any]:
        return {
            "identity": self.identity_id,
            "params": list(self.params),
            "pass": self.passed,
            "residual": self.residual.to_json(),
            "residual_text": self.residual.to_str(),
            "counterexample": list(self.counterexample) if self.counterexample is not None else None,
            "expected_failure": self.expected_failure,
            "note": self.note,
        }


def summarize(reports: Iterable[IdentityReport]) -> Dict[str, int]:
    """Counts per outcome, for stderr summaries."""
    counts = {"total": 0, "passed": 0, "failed": 0, "expected_failures": 0}
    for report in reports:
        counts["total"] += 1
        if report.passed:
            counts["passed"] += 1
        elif report.expected_failure:
            counts["expected_failures"] += 1
        else:
            counts["failed"] += 1
    return counts


def failing(reports: Iterable[IdentityReport]) -> List[IdentityReport]:
    return [r for r in reports if r.unexpected_failure]
