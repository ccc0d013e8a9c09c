"""
Teleportation GME: Verification Output Schemas

MonotonicitySummary: one measure's result over an LOCC trial corpus.
CheckRecord:         one line of `verify` output.
CheckSummary:        the whole `verify` run.
"""

from typing import List

from pydantic import Field

from app.enums.enums import MeasureId
from app.schemas.base_schema import BaseSchema


class MonotonicitySummary(BaseSchema):
    measure: MeasureId
    trials: int = Field(ge=0)
    min_delta: float
    passed: bool


class CheckRecord(BaseSchema):
    check: str
    label: str
    trials: int = Field(ge=0)
    worst: float
    threshold: float
    passed: bool
    detail: str = ""

    def summary_line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = (
            f"{verdict} {self.check}/{self.label} trials={self.trials} "
            f"worst={self.worst:.6g} threshold={self.threshold:.3g}"
        )
        return f"{line} ({self.detail})" if self.detail else line


class CheckSummary(BaseSchema):
    seed: int
    results: List[CheckRecord]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failed(self) -> List[CheckRecord]:
        return [r for r in self.results if not r.passed]
