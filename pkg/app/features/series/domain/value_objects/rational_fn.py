"""Rational function value object in q, kept in canonical reduced form."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Sequence, Tuple

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ

from app.core.shared.exceptions import DomainError, ValidationError
from app.core.utils.validators import format_rational
from app.features.series.domain.value_objects.laurent_poly import LaurentPoly

q = Symbol("q")

Coefficients = Tuple[Fraction, ...]


def _to_poly(coeffs: Sequence[Fraction]) -> Poly:
    """Poly over QQ from ascending coefficients."""
    dense = [Rational(c.numerator, c.denominator) for c in reversed(list(coeffs))] or [0]
    return Poly(dense, q, domain=QQ)


def _from_poly(poly: Poly) -> Coefficients:
    """Ascending Fraction coefficients of a Poly, without trailing zeros."""
    if poly.is_zero:
        return ()
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class RationalFn:
    """num(q) / den(q) with gcd(num, den) = 1 and den monic.

    Coefficient tuples are ascending in the power of q, so equal functions have
    equal fields.
    """

    num: Coefficients
    den: Coefficients

    def __post_init__(self):
        """Validate canonical form after initialization."""
        if not self.den:
            raise ValidationError("rational function denominator must be nonzero")
        if self.den[-1] != 1:
            raise ValidationError("rational function denominator must be monic")

    @classmethod
    def from_coefficients(cls, num: Sequence[Any], den: Sequence[Any]) -> "RationalFn":
        """Reduce num/den to canonical form."""
        return cls.from_polys(_to_poly([Fraction(c) for c in num]), _to_poly([Fraction(c) for c in den]))

    @classmethod
    def from_polys(cls, num: Poly, den: Poly) -> "RationalFn":
        if den.is_zero:
            raise DomainError("rational function with zero denominator")
        if num.is_zero:
            return cls.zero()
        g = num.gcd(den)
        num, den = num.exquo(g), den.exquo(g)
        lead = den.LC()
        return cls(num=_from_poly(num.quo_ground(lead)), den=_from_poly(den.monic()))

    @classmethod
    def from_laurent(cls, poly: LaurentPoly) -> "RationalFn":
        """q^{-s} * (shifted polynomial) for a Laurent polynomial."""
        if poly.is_zero():
            return cls.zero()
        shift = min(0, poly.min_degree)
        top = poly.max_degree - shift
        num = [poly.coefficient(e + shift) for e in range(top + 1)]
        den = [Fraction(0)] * (-shift) + [Fraction(1)]
        return cls.from_coefficients(num, den)

    @classmethod
    def zero(cls) -> "RationalFn":
        return cls(num=(), den=(Fraction(1),))

    @classmethod
    def one(cls) -> "RationalFn":
        return cls(num=(Fraction(1),), den=(Fraction(1),))

    @classmethod
    def constant(cls, value) -> "RationalFn":
        value = Fraction(value)
        return cls(num=(value,) if value else (), den=(Fraction(1),))

    def is_zero(self) -> bool:
        return not self.num

    @property
    def num_poly(self) -> Poly:
        return _to_poly(self.num)

    @property
    def den_poly(self) -> Poly:
        return _to_poly(self.den)

    def __add__(self, other: "RationalFn") -> "RationalFn":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        return RationalFn.from_polys(
            self.num_poly * other.den_poly + other.num_poly * self.den_poly,
            self.den_poly * other.den_poly,
        )

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return self + other.scale(Fraction(-1))

    def __neg__(self) -> "RationalFn":
        return self.scale(Fraction(-1))

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        if self.is_zero() or other.is_zero():
            return RationalFn.zero()
        return RationalFn.from_polys(self.num_poly * other.num_poly, self.den_poly * other.den_poly)

    def scale(self, factor) -> "RationalFn":
        factor = Fraction(factor)
        if not factor:
            return RationalFn.zero()
        return RationalFn(num=tuple(c * factor for c in self.num), den=self.den)

    def inverse_q(self) -> "RationalFn":
        """f(1/q), cleared of denominators."""
        if self.is_zero():
            return self
        num_deg, den_deg = len(self.num) - 1, len(self.den) - 1
        num = list(reversed(self.num))
        den = list(reversed(self.den))
        if den_deg >= num_deg:
            num = [Fraction(0)] * (den_deg - num_deg) + num
        else:
            den = [Fraction(0)] * (num_deg - den_deg) + den
        return RationalFn.from_coefficients(num, den)

    def is_q_symmetric(self) -> bool:
        return self == self.inverse_q()

    def order_at_zero(self) -> int:
        """Power of q dividing the denominator."""
        return next(i for i, c in enumerate(self.den) if c)

    def expand(self, lo: int, hi: int) -> LaurentPoly:
        """Laurent expansion at q = 0, truncated to exponents in [lo, hi]."""
        shift = self.order_at_zero()
        base = self.den[shift:]
        series: Dict[int, Fraction] = {}
        for k in range(0, hi + shift + 1):
            value = self.num[k] if k < len(self.num) else Fraction(0)
            for j in range(1, min(k, len(base) - 1) + 1):
                value -= base[j] * series.get(k - j, Fraction(0))
            series[k] = value / base[0]
        return LaurentPoly({k - shift: c for k, c in series.items()}).truncate(lo, hi)

    def to_expr(self):
        """sympy expression, for display."""
        return self.num_poly.as_expr() / self.den_poly.as_expr()

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "num": [format_rational(c) for c in self.num],
            "den": [format_rational(c) for c in self.den],
        }

    def __str__(self) -> str:
        return str(self.to_expr())
