"""Typed documents that cross the process boundary (inputs, reports, outcomes)."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class SearchBudget(BaseModel):
    """Budget descriptor for the randomized minimum-rank search.

    Deterministic given ``seed``.
    """
    seed: int = Field(default=0)
    max_rank: Optional[int] = Field(default=None, ge=1)
    entry_bound: int = Field(default=6, ge=1, le=1000)
    restarts: int = Field(default=4, ge=1, le=1000)
    iterations: int = Field(default=6, ge=1, le=1000)

    @classmethod
    def from_settings(cls, seed: Optional[int] = None) -> "SearchBudget":
        from signrank.core.config import settings

        return cls(
            seed=settings.seed if seed is None else seed,
            max_rank=settings.search_max_rank,
            entry_bound=settings.search_entry_bound,
            restarts=settings.search_restarts,
            iterations=settings.search_iterations,
        )


class IncidenceDocument(BaseModel):
    """Input model for incidence-structure JSON."""
    points: List[str] = Field(..., min_length=1)
    lines: List[List[str]] = Field(default_factory=list)


class CheckResult(BaseModel):
    """One named verification with its exact evidence."""
    name: str
    passed: bool
    evidence: str = ""


class VerificationReport(BaseModel):
    """Pass/fail record of every invariant recomputed on a bundle."""
    checks: List[CheckResult] = Field(default_factory=list)
    summary: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, evidence: str = "") -> None:
        self.checks.append(CheckResult(name=name, passed=bool(passed), evidence=evidence))

    def failed(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


class CommandOutcome(BaseModel):
    """Output model for every CLI command."""
    exit_code: int = Field(..., ge=0, le=3)
    artifacts_written: List[str] = Field(default_factory=list)
    summary: str = ""
    details: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _default_summary(self) -> "CommandOutcome":
        if not self.summary:
            self.summary = {0: "ok", 1: "verification failed", 2: "usage error", 3: "inconclusive"}[self.exit_code]
        return self
