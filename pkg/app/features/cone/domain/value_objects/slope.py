"""Value object representing the slope of a numerical class."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from app.core.shared.exceptions import ValidationError
from app.core.utils.validators import format_rational


@dataclass(frozen=True)
class Slope:
    """Slope n / (omega . beta) of a torsion class.

    Rank -1 classes have no finite slope; they carry ``value=None``.
    """

    value: Optional[Fraction]

    def __post_init__(self):
        """Validate slope value after initialization."""
        if self.value is not None and not isinstance(self.value, Fraction):
            raise ValidationError("slope must be an exact rational")

    @classmethod
    def finite(cls, numerator: int, degree: int) -> "Slope":
        """Create the slope numerator / degree of a torsion class."""
        if degree <= 0:
            raise ValidationError("torsion slope needs a positive degree")
        return cls(value=Fraction(numerator, degree))

    @classmethod
    def infinite(cls) -> "Slope":
        """Create the distinguished slope of a rank -1 class."""
        return cls(value=None)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def to_str(self) -> str:
        """Render as "p/q", or "inf" for rank -1 classes."""
        if self.value is None:
            return "inf"
        return format_rational(self.value)
