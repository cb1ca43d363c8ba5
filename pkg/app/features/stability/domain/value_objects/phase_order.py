"""Outcome of comparing two phases in the ordered field of the weak stability."""

from enum import Enum


class PhaseOrder(Enum):
    """Result of comparing Z(v) with Z(w)."""
    LT = "Lt"
    EQ = "Eq"
    GT = "Gt"

    def reversed(self) -> "PhaseOrder":
        """Swap Lt and Gt."""
        if self is PhaseOrder.LT:
            return PhaseOrder.GT
        if self is PhaseOrder.GT:
            return PhaseOrder.LT
        return self

    @property
    def is_ge(self) -> bool:
        return self is not PhaseOrder.LT

    @property
    def is_le(self) -> bool:
        return self is not PhaseOrder.GT

    @classmethod
    def of(cls, a, b) -> "PhaseOrder":
        """Compare two totally ordered values."""
        if a < b:
            return cls.LT
        if a > b:
            return cls.GT
        return cls.EQ
