"""Laurent polynomial value object in the variable q."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from app.core.shared.exceptions import ValidationError
from app.core.utils.validators import format_rational


@dataclass(frozen=True)
class LaurentPoly:
    """Finite sum of c_n q^n with exact coefficients; zeros are never stored."""

    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        """Normalize coefficients after initialization."""
        cleaned: Dict[int, Fraction] = {}
        for exponent, coeff in self.coeffs.items():
            if isinstance(exponent, bool) or not isinstance(exponent, int):
                raise ValidationError("Laurent exponents must be integers")
            if isinstance(coeff, (bool, float)):
                raise ValidationError("Laurent coefficients must be exact rationals")
            coeff = Fraction(coeff)
            if coeff:
                cleaned[exponent] = coeff
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: Fraction(1)})

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls({exponent: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> Fraction:
        return self.coeffs.get(exponent, Fraction(0))

    @property
    def min_degree(self) -> Optional[int]:
        return min(self.coeffs) if self.coeffs else None

    @property
    def max_degree(self) -> Optional[int]:
        return max(self.coeffs) if self.coeffs else None

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        result = dict(self.coeffs)
        for exponent, coeff in other.coeffs.items():
            result[exponent] = result.get(exponent, Fraction(0)) + coeff
        return LaurentPoly(result)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + other.scale(Fraction(-1))

    def __neg__(self) -> "LaurentPoly":
        return self.scale(Fraction(-1))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        result: Dict[int, Fraction] = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                result[a + b] = result.get(a + b, Fraction(0)) + x * y
        return LaurentPoly(result)

    def scale(self, factor) -> "LaurentPoly":
        factor = Fraction(factor)
        return LaurentPoly({e: c * factor for e, c in self.coeffs.items()})

    def truncate(self, lo: Optional[int] = None, hi: Optional[int] = None) -> "LaurentPoly":
        """Keep exponents in [lo, hi]; a missing bound is open."""
        return LaurentPoly(
            {
                e: c
                for e, c in self.coeffs.items()
                if (lo is None or e >= lo) and (hi is None or e <= hi)
            }
        )

    def inverse_q(self) -> "LaurentPoly":
        """Substitute q -> 1/q."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def is_symmetric(self) -> bool:
        """Check if c_n = c_{-n} for every n."""
        return self == self.inverse_q()

    def to_rational(self):
        """The same function as a reduced RationalFn."""
        from app.features.series.domain.value_objects.rational_fn import RationalFn

        return RationalFn.from_laurent(self)

    def terms(self) -> List[Tuple[int, Fraction]]:
        return sorted(self.coeffs.items())

    def to_list(self) -> List[List]:
        return [[e, format_rational(c)] for e, c in self.terms()]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{format_rational(c)}*q^{e}" for e, c in self.terms())
