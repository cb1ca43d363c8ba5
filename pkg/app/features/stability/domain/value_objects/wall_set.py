"""Value object describing the discrete wall set S(beta)."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple

from app.core.shared.exceptions import PreconditionError, ValidationError
from app.core.utils.validators import format_rational


@dataclass(frozen=True)
class WallSet:
    """Walls k with k * 2(omega . beta') integral for some 0 < beta' <= beta."""

    beta: Tuple[int, ...]
    denominators: Tuple[int, ...]

    def __post_init__(self):
        """Validate denominators after initialization."""
        if not self.denominators:
            raise ValidationError("a wall set needs at least one denominator")
        if any(d <= 0 for d in self.denominators):
            raise ValidationError("wall denominators must be positive")
        if tuple(sorted(set(self.denominators))) != self.denominators:
            raise ValidationError("wall denominators must be sorted and distinct")

    def contains(self, k: Fraction) -> bool:
        """Check if k lies on a wall."""
        return any((k * d).denominator == 1 for d in self.denominators)

    def next_above(self, k: Fraction) -> Fraction:
        """Smallest wall strictly above k."""
        return min(Fraction(math.floor(k * d) + 1, d) for d in self.denominators)

    def next_below(self, k: Fraction) -> Fraction:
        """Largest wall strictly below k."""
        return max(Fraction(math.ceil(k * d) - 1, d) for d in self.denominators)

    def chamber_samples(self, k0: Fraction) -> Tuple[Fraction, Fraction]:
        """Sample points k- < k0 < k+ inside the chambers adjacent to the wall k0."""
        if not self.contains(k0):
            raise PreconditionError(f"k={format_rational(k0)} is not a wall")
        return (k0 + self.next_below(k0)) / 2, (k0 + self.next_above(k0)) / 2

    def chamber_of(self, k: Fraction) -> Tuple[Fraction, Fraction]:
        """Walls bracketing k; (k, k) when k is itself a wall."""
        if self.contains(k):
            return k, k
        return self.next_below(k), self.next_above(k)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "beta": list(self.beta),
            "denominators": list(self.denominators),
        }
