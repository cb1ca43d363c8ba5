"""Value object representing a numerical class (r, 0, beta, n)."""

from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from app.core.shared.exceptions import ValidationError


@dataclass(frozen=True, order=True)
class NumClass:
    """Numerical class with rank r in {0, -1}, curve class beta and Euler characteristic n.

    ch_1 is always zero, so the class is fully described by (r, beta, n).
    """

    r: int
    beta: Tuple[int, ...]
    n: int

    def __post_init__(self):
        """Validate class invariants after initialization."""
        if not isinstance(self.beta, tuple):
            object.__setattr__(self, "beta", tuple(self.beta))
        problem = self.invalid_reason(self.r, self.beta, self.n)
        if problem:
            raise ValidationError(problem)

    @staticmethod
    def invalid_reason(r: int, beta: Sequence[int], n: int) -> str:
        """Return why (r, beta, n) is not a valid class, or an empty string."""
        if r not in (0, -1):
            return f"rank must be 0 or -1, got {r}"
        if any(b < 0 for b in beta):
            return f"beta must be effective, got {list(beta)}"
        if r == 0 and not any(beta):
            return "torsion classes must have beta != 0"
        if r == -1 and not any(beta) and n != 0:
            return f"rank -1 class with beta = 0 must have n = 0, got n={n}"
        return ""

    @classmethod
    def is_valid(cls, r: int, beta: Sequence[int], n: int) -> bool:
        """Check if (r, beta, n) satisfies the class invariants."""
        return not cls.invalid_reason(r, beta, n)

    @classmethod
    def create(cls, r: int, beta: Sequence[int], n: int) -> "NumClass":
        """Create a class from plain values."""
        return cls(r=int(r), beta=tuple(int(b) for b in beta), n=int(n))

    @classmethod
    def from_list(cls, data: Sequence[Any]) -> "NumClass":
        """Create a class from the serialized form [r, [beta...], n]."""
        if len(data) != 3:
            raise ValidationError(f"class must be [r, [beta...], n], got {data!r}")
        r, beta, n = data
        return cls.create(r, beta, n)

    @property
    def is_torsion(self) -> bool:
        """Check if this is a one-dimensional (rank 0) class."""
        return self.r == 0

    @property
    def is_rank(self) -> bool:
        """Check if this is a rank -1 class."""
        return self.r == -1

    @property
    def dimension(self) -> int:
        return len(self.beta)

    def __add__(self, other: "NumClass") -> "NumClass":
        if self.dimension != other.dimension:
            raise ValidationError("cannot add classes of different cone rank")
        return NumClass(
            r=self.r + other.r,
            beta=tuple(a + b for a, b in zip(self.beta, other.beta)),
            n=self.n + other.n,
        )

    def __sub__(self, other: "NumClass") -> "NumClass":
        if self.dimension != other.dimension:
            raise ValidationError("cannot subtract classes of different cone rank")
        return NumClass(
            r=self.r - other.r,
            beta=tuple(a - b for a, b in zip(self.beta, other.beta)),
            n=self.n - other.n,
        )

    def dual(self) -> "NumClass":
        """Return the derived dual class (r, beta, -n)."""
        return NumClass(r=self.r, beta=self.beta, n=-self.n)

    def to_list(self) -> List[Any]:
        """Convert to the serialized form [r, [beta...], n]."""
        return [self.r, list(self.beta), self.n]

    def label(self) -> str:
        """Compact label used in expression dumps."""
        beta = ",".join(str(b) for b in self.beta)
        return f"({self.r},({beta}),{self.n})"

    def __str__(self) -> str:
        return self.label()


def raw_sum(classes: Sequence[NumClass]) -> Tuple[int, Tuple[int, ...], int]:
    """Componentwise sum of classes without validating the result."""
    if not classes:
        raise ValidationError("cannot sum an empty tuple of classes")
    dim = classes[0].dimension
    beta = [0] * dim
    r = n = 0
    for cls in classes:
        r += cls.r
        n += cls.n
        for i, b in enumerate(cls.beta):
            beta[i] += b
    return r, tuple(beta), n


def class_sum(classes: Sequence[NumClass]) -> NumClass:
    """Sum classes, raising ValidationError if the total is not a valid class."""
    r, beta, n = raw_sum(classes)
    return NumClass(r=r, beta=beta, n=n)
