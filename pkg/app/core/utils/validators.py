"""Validation and exact-value parsing utilities."""

import re
from fractions import Fraction
from typing import Any, Sequence, Tuple, Union

from app.core.shared.exceptions import ValidationError

RationalLike = Union[int, str, Fraction]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: Any, field: str = "value") -> Fraction:
    """Parse an exact rational from an int, a Fraction or a "p/q" string.

    Floats are rejected: every quantity in the engine is exact.
    """
    if isinstance(value, bool):
        raise ValidationError(f"{field}: booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise ValidationError(f"{field}: '{value}' is not an exact rational 'p/q'")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise ValidationError(f"{field}: zero denominator in '{value}'")
        return Fraction(numerator, denominator)
    raise ValidationError(f"{field}: expected int or 'p/q' string, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Render a rational as "p" or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def validate_beta(beta: Sequence[int], rank: int, field: str = "beta") -> Tuple[int, ...]:
    """Validate an effective curve class vector of the given rank."""
    if len(beta) != rank:
        raise ValidationError(f"{field}: expected {rank} components, got {len(beta)}")
    result = []
    for component in beta:
        if isinstance(component, bool) or not isinstance(component, int):
            raise ValidationError(f"{field}: components must be integers")
        if component < 0:
            raise ValidationError(f"{field}: components must be nonnegative")
        result.append(component)
    return tuple(result)


def validate_window(window: Sequence[int], field: str = "q_window") -> Tuple[int, int]:
    """Validate an inclusive integer window (lo, hi)."""
    if len(window) != 2:
        raise ValidationError(f"{field}: expected [lo, hi]")
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise ValidationError(f"{field}: lo={lo} exceeds hi={hi}")
    return lo, hi
