from abc import ABC, abstractmethod
from typing import Any, Iterator

import numpy as np
from pydantic import BaseModel, Field


class CaseOutcome(BaseModel):
    """One checked case of a suite."""

    passed: bool
    witness: dict[str, Any] = Field(default_factory=dict, description="Data that reproduces it")


class SuiteResult(BaseModel):
    """Summary of one invariant suite run."""

    family: str
    trials: int = Field(..., description="Number of cases checked")
    passed: bool
    failures: int
    seed: int
    exhaustive: bool = False
    witness: dict[str, Any] | None = Field(None, description="First failing case")


class BaseSuite(ABC):
    """Abstract base class for invariant suites."""

    family: str
    default_trials: int = 200
    default_max_n: int = 40

    @abstractmethod
    def cases(
        self, rng: np.random.Generator, trials: int, max_n: int, exhaustive: bool
    ) -> Iterator[Any]:
        """Yield the cases to check, randomly drawn or enumerated."""

    @abstractmethod
    def check(self, case: Any) -> CaseOutcome:
        """Check one case."""
