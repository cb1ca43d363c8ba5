"""Value object for weakly monotone surjections {1..l} -> {1..m}."""

from dataclasses import dataclass
from itertools import combinations
from math import factorial
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, TypeVar

from app.core.shared.exceptions import ValidationError

T = TypeVar("T")


@dataclass(frozen=True)
class OrderedSurjection:
    """A composition of l into m positive block sizes."""

    block_sizes: Tuple[int, ...]

    def __post_init__(self):
        """Validate block sizes after initialization."""
        if not self.block_sizes:
            raise ValidationError("a surjection needs at least one block")
        if any(size < 1 for size in self.block_sizes):
            raise ValidationError("all block sizes must be positive")

    @classmethod
    def all(cls, l: int, m: int) -> List["OrderedSurjection"]:
        """All compositions of l into m parts, ordered by cut positions."""
        if m < 1 or m > l:
            return []
        result = []
        for cuts in combinations(range(1, l), m - 1):
            bounds = (0,) + cuts + (l,)
            result.append(cls(tuple(b - a for a, b in zip(bounds, bounds[1:]))))
        return result

    @property
    def l(self) -> int:
        return sum(self.block_sizes)

    @property
    def m(self) -> int:
        return len(self.block_sizes)

    def image(self, i: int) -> int:
        """psi(i) for a 0-based position i, as a 0-based block index."""
        start = 0
        for b, size in enumerate(self.block_sizes):
            if i < start + size:
                return b
            start += size
        raise ValidationError(f"position {i} outside 0..{self.l - 1}")

    def blocks(self, items: Sequence[T]) -> List[Tuple[T, ...]]:
        """Split a length-l sequence into the consecutive fibres of psi."""
        if len(items) != self.l:
            raise ValidationError(f"expected {self.l} items, got {len(items)}")
        result, start = [], 0
        for size in self.block_sizes:
            result.append(tuple(items[start:start + size]))
            start += size
        return result

    def factorial_weight(self) -> Fraction:
        """prod_b 1 / |psi^{-1}(b)|!."""
        weight = Fraction(1)
        for size in self.block_sizes:
            weight /= factorial(size)
        return weight

    def to_dict(self) -> Dict[str, Any]:
        return {"l": self.l, "m": self.m, "block_sizes": list(self.block_sizes)}
