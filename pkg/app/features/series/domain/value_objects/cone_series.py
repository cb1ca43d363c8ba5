"""Cone-graded series sum_beta f_beta(q) v^beta."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Any, Dict, List, Mapping, Optional, Union

from app.core.shared.exceptions import DomainError, ValidationError
from app.features.cone.domain.entities.cone_model import Beta, classes_in_box
from app.features.series.domain.value_objects.laurent_poly import LaurentPoly
from app.features.series.domain.value_objects.rational_fn import RationalFn

Coefficient = Union[LaurentPoly, RationalFn]


class SeriesMode(str, Enum):
    """Coefficient representation of a cone series."""
    WINDOW = "window"
    CLOSED = "closed"


@dataclass(frozen=True)
class ConeSeries:
    """Truncated series in v^beta for beta <= cutoff.

    Window mode holds Laurent polynomials (a q-window of a series), closed mode
    holds rational functions.
    """

    coeffs: Mapping[Beta, Coefficient]
    cutoff: Beta
    mode: SeriesMode
    ceiling: Optional[int] = None

    def __post_init__(self):
        """Validate coefficients after initialization."""
        kind = LaurentPoly if self.mode is SeriesMode.WINDOW else RationalFn
        cleaned: Dict[Beta, Coefficient] = {}
        for beta, coeff in self.coeffs.items():
            beta = tuple(beta)
            if len(beta) != len(self.cutoff) or any(b > c for b, c in zip(beta, self.cutoff)):
                raise ValidationError(f"series term beta={list(beta)} exceeds cutoff {list(self.cutoff)}")
            if not isinstance(coeff, kind):
                raise ValidationError(f"{self.mode.value} series needs {kind.__name__} coefficients")
            if self.ceiling is not None and isinstance(coeff, LaurentPoly):
                coeff = coeff.truncate(hi=self.ceiling)
            if not coeff.is_zero():
                cleaned[beta] = coeff
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def create(
        cls,
        coeffs: Mapping[Beta, Coefficient],
        cutoff: Beta,
        mode: SeriesMode,
        ceiling: Optional[int] = None,
    ) -> "ConeSeries":
        return cls(coeffs=dict(coeffs), cutoff=tuple(cutoff), mode=mode, ceiling=ceiling)

    def _unit_coeff(self) -> Coefficient:
        return LaurentPoly.one() if self.mode is SeriesMode.WINDOW else RationalFn.one()

    def _zero_coeff(self) -> Coefficient:
        return LaurentPoly.zero() if self.mode is SeriesMode.WINDOW else RationalFn.zero()

    def unit(self) -> "ConeSeries":
        zero = tuple(0 for _ in self.cutoff)
        return self._like({zero: self._unit_coeff()})

    def _like(self, coeffs: Mapping[Beta, Coefficient]) -> "ConeSeries":
        return ConeSeries(coeffs=coeffs, cutoff=self.cutoff, mode=self.mode, ceiling=self.ceiling)

    def coefficient(self, beta) -> Coefficient:
        return self.coeffs.get(tuple(beta), self._zero_coeff())

    def betas(self) -> List[Beta]:
        return sorted(self.coeffs)

    def _check_compatible(self, other: "ConeSeries") -> None:
        if other.mode is not self.mode or other.cutoff != self.cutoff:
            raise ValidationError("series must share mode and cutoff")

    def __add__(self, other: "ConeSeries") -> "ConeSeries":
        self._check_compatible(other)
        result = dict(self.coeffs)
        for beta, coeff in other.coeffs.items():
            result[beta] = result[beta] + coeff if beta in result else coeff
        return self._like(result)

    def __mul__(self, other: "ConeSeries") -> "ConeSeries":
        """Graded product, dropping classes beyond the cutoff."""
        self._check_compatible(other)
        result: Dict[Beta, Coefficient] = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                beta = tuple(i + j for i, j in zip(a, b))
                if any(s > c for s, c in zip(beta, self.cutoff)):
                    continue
                term = x * y
                if self.ceiling is not None and isinstance(term, LaurentPoly):
                    term = term.truncate(hi=self.ceiling)
                result[beta] = result[beta] + term if beta in result else term
        return self._like(result)

    def scale(self, factor) -> "ConeSeries":
        return self._like({beta: coeff.scale(factor) for beta, coeff in self.coeffs.items()})

    def power(self, exponent: int) -> "ConeSeries":
        result = self.unit()
        for _ in range(exponent):
            result = result * self
        return result

    def exp(self) -> "ConeSeries":
        """sum_m X^m / m!; terminates because X has no beta = 0 term."""
        zero = tuple(0 for _ in self.cutoff)
        if zero in self.coeffs:
            raise DomainError("exp needs a series without beta = 0 term")
        result = self.unit()
        term = self.unit()
        for m in range(1, sum(self.cutoff) + 1):
            term = term * self
            if not term.coeffs:
                break
            result = result + term.scale(Fraction(1, factorial(m)))
        return result

    def truncate(self, lo: int, hi: int) -> "ConeSeries":
        """Restrict window coefficients to exponents in [lo, hi]."""
        if self.mode is not SeriesMode.WINDOW:
            raise DomainError("only window series can be truncated")
        return ConeSeries(
            coeffs={beta: coeff.truncate(lo, hi) for beta, coeff in self.coeffs.items()},
            cutoff=self.cutoff,
            mode=self.mode,
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        terms = []
        for beta in classes_in_box(self.cutoff):
            if beta not in self.coeffs:
                continue
            coeff = self.coeffs[beta]
            entry: Dict[str, Any] = {"beta": list(beta)}
            if isinstance(coeff, LaurentPoly):
                entry["terms"] = coeff.to_list()
            else:
                entry.update(coeff.to_dict())
            terms.append(entry)
        return {"mode": self.mode.value, "cutoff": list(self.cutoff), "series": terms}
