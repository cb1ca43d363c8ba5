"""Value object recording one symbolic identity check."""

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from app.features.hall.domain.value_objects.hall_expr import HallExpr


@dataclass(frozen=True)
class IdentityCheck:
    """Comparison of a computed expression against the expected one."""

    name: str
    expected: HallExpr
    actual: HallExpr

    @property
    def residual(self) -> HallExpr:
        return self.actual - self.expected

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        data: Dict[str, Any] = {"name": self.name, "passed": self.passed, "words": len(self.actual)}
        if not self.passed:
            data["residual"] = self.residual.dump().splitlines()
        return data


@dataclass(frozen=True)
class IdentityReport:
    """All identity checks of one run plus the expressions they exercised."""

    checks: Tuple[IdentityCheck, ...]
    expressions: Tuple[Tuple[str, HallExpr], ...] = ()

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[str]:
        return [check.name for check in self.checks if not check.passed]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "expressions": {name: expr.dump().splitlines() for name, expr in self.expressions},
        }
