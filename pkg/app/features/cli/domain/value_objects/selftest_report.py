"""Value objects for the acceptance self-test."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class SuiteResult:
    """Outcome of one acceptance suite."""

    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail: str) -> None:
        """Count one check, remembering its detail if it failed."""
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures[:10],
            "failure_count": len(self.failures),
        }


@dataclass(frozen=True)
class SelftestReport:
    """All acceptance suites of one run."""

    seed: int
    trials: int
    suites: List[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)

    @property
    def checked(self) -> int:
        return sum(suite.checked for suite in self.suites)

    def suite(self, name: str) -> Optional[SuiteResult]:
        return next((s for s in self.suites if s.name == name), None)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "checked": self.checked,
            "suites": [suite.to_dict() for suite in self.suites],
        }
