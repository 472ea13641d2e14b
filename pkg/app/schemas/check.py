"""Check outcomes."""

from typing import Literal

from pydantic import BaseModel, Field

Status = Literal["proved", "conjectured", "exact"]


class CheckOutcome(BaseModel):
    """Result of one check; exact checks are computations without a theorem attached."""

    suite: str
    name: str
    status: Status = "exact"
    passed: bool
    expected: str | None = None
    actual: str | None = None


class CheckSummary(BaseModel):
    outcomes: list[CheckOutcome] = Field(default_factory=list)

    @property
    def required_failures(self) -> list[CheckOutcome]:
        return [o for o in self.outcomes if not o.passed and o.status != "conjectured"]

    @property
    def conjecture_failures(self) -> list[CheckOutcome]:
        return [o for o in self.outcomes if not o.passed and o.status == "conjectured"]

    def passed(self, strict_conjectures: bool = False) -> bool:
        if self.required_failures:
            return False
        return not (strict_conjectures and self.conjecture_failures)
