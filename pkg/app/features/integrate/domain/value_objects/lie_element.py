"""Element of the Lie algebra spanned by symbols c_v."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping

from app.core.shared.exceptions import ValidationError
from app.core.utils.validators import format_rational
from app.features.cone.domain.value_objects.num_class import NumClass, raw_sum

Pairing = Callable[[NumClass, NumClass], int]


@dataclass(frozen=True)
class LieElement:
    """Finite combination sum_v a_v c_v with [c_v, c_w] = chi(v, w) c_{v+w}.

    Brackets landing outside ranks {0, -1} are dropped; those classes span an ideal.
    """

    terms: Mapping[NumClass, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        """Drop zero coefficients after initialization."""
        cleaned: Dict[NumClass, Fraction] = {}
        for cls, coeff in self.terms.items():
            if not isinstance(coeff, (Fraction, int)) or isinstance(coeff, bool):
                raise ValidationError("Lie coefficients must be exact rationals")
            if coeff:
                cleaned[cls] = Fraction(coeff)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def basis(cls, v: NumClass, coeff: Fraction = Fraction(1)) -> "LieElement":
        return cls({v: Fraction(coeff)})

    def __add__(self, other: "LieElement") -> "LieElement":
        result = dict(self.terms)
        for cls, coeff in other.terms.items():
            result[cls] = result.get(cls, Fraction(0)) + coeff
        return LieElement(result)

    def scale(self, factor: Fraction) -> "LieElement":
        return LieElement({cls: coeff * factor for cls, coeff in self.terms.items()})

    def __neg__(self) -> "LieElement":
        return self.scale(Fraction(-1))

    def bracket(self, other: "LieElement", pairing: Pairing) -> "LieElement":
        """Bilinear extension of [c_v, c_w] = chi(v, w) c_{v+w}."""
        result: Dict[NumClass, Fraction] = {}
        for v, a in self.terms.items():
            for w, b in other.terms.items():
                chi = pairing(v, w)
                if not chi:
                    continue
                r, beta, n = raw_sum([v, w])
                if not NumClass.is_valid(r, beta, n):
                    continue
                total = NumClass(r=r, beta=beta, n=n)
                result[total] = result.get(total, Fraction(0)) + a * b * chi
        return LieElement(result)

    def to_list(self) -> List[List]:
        return [[cls.to_list(), format_rational(c)] for cls, c in sorted(self.terms.items())]
