"""Value objects describing the outcome of a factorization roundtrip."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from app.core.shared.exceptions import ValidationError
from app.core.utils.validators import format_rational


@dataclass(frozen=True)
class CheckFailure:
    """First coefficient at which an assertion failed."""

    assertion: str
    beta: Sequence[int]
    degree: int
    expected: Fraction
    actual: Fraction

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "assertion": self.assertion,
            "beta": list(self.beta),
            "degree": self.degree,
            "expected": format_rational(self.expected),
            "actual": format_rational(self.actual),
        }


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one assertion over all classes it covers."""

    assertion: str
    checked: int
    failure: Optional[CheckFailure] = None
    skipped: bool = False

    def __post_init__(self):
        """Validate check result after initialization."""
        if self.checked < 0:
            raise ValidationError("checked count cannot be negative")

    @property
    def passed(self) -> bool:
        return self.failure is None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "assertion": self.assertion,
            "checked": self.checked,
            "passed": self.passed,
            "skipped": self.skipped,
        }


@dataclass(frozen=True)
class RoundtripReport:
    """Pass/fail report of a roundtrip, pinpointing the first failure."""

    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[CheckFailure]:
        return next((c.failure for c in self.checks if c.failure is not None), None)

    def check(self, assertion: str) -> CheckResult:
        for result in self.checks:
            if result.assertion == assertion:
                return result
        raise KeyError(assertion)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        failure = self.first_failure
        return {
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "first_failure": failure.to_dict() if failure else None,
        }
