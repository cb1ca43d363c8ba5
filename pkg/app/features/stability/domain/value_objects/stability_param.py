"""Value object for the stability parameter sigma = k*omega + i*omega."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from app.core.shared.exceptions import ValidationError
from app.core.utils.validators import format_rational, parse_rational


@dataclass(frozen=True, order=True)
class StabilityParam:
    """Exact rational k selecting the mu-limit weak stability condition."""

    k: Fraction

    def __post_init__(self):
        """Validate exactness after initialization."""
        if isinstance(self.k, bool) or not isinstance(self.k, (Fraction, int)):
            raise ValidationError("stability parameter k must be an exact rational")
        if isinstance(self.k, int):
            object.__setattr__(self, "k", Fraction(self.k))

    @classmethod
    def create(cls, value: Any) -> "StabilityParam":
        """Create from an int, a Fraction or a "p/q" string."""
        return cls(k=parse_rational(value, field="k"))

    def dual(self) -> "StabilityParam":
        """Return the parameter of the dual stability condition (k -> -k)."""
        return StabilityParam(k=-self.k)

    @property
    def rank_threshold(self) -> Fraction:
        """Slope -2k at which rank -1 and torsion phases coincide."""
        return -2 * self.k

    @property
    def sigma_threshold(self) -> Fraction:
        """The same threshold in twisted-slope units, -3k."""
        return -3 * self.k

    def to_str(self) -> str:
        return format_rational(self.k)

    def __str__(self) -> str:
        return self.to_str()
