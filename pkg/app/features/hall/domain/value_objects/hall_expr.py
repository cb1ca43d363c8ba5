"""Free graded associative algebra on delta/epsilon symbols."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from app.core.shared.exceptions import ValidationError
from app.core.utils.validators import format_rational
from app.features.cone.domain.value_objects.num_class import NumClass


class SymbolKind(str, Enum):
    """Kind of Hall algebra generator."""
    DELTA = "delta"
    EPS = "eps"

    @property
    def glyph(self) -> str:
        return "δ" if self is SymbolKind.DELTA else "ε"


@dataclass(frozen=True, order=True)
class HallSymbol:
    """delta^v(Z) or epsilon^v(Z) at the stability parameter k."""

    kind: SymbolKind
    cls: NumClass
    k: Fraction

    def label(self) -> str:
        return f"{self.kind.glyph}[{self.cls.label()}@{format_rational(self.k)}]"


Word = Tuple[HallSymbol, ...]
SubstitutionRule = Callable[[HallSymbol], Optional["HallExpr"]]


@dataclass(frozen=True)
class HallExpr:
    """Finite formal sum of words with exact rational coefficients.

    Zero coefficients are never stored, so equality is literal.
    """

    terms: Mapping[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        """Drop zero coefficients and check exactness."""
        cleaned: Dict[Word, Fraction] = {}
        for word, coeff in self.terms.items():
            if isinstance(coeff, int):
                coeff = Fraction(coeff)
            if not isinstance(coeff, Fraction):
                raise ValidationError("Hall coefficients must be exact rationals")
            if coeff:
                cleaned[tuple(word)] = coeff
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls) -> "HallExpr":
        return cls({})

    @classmethod
    def unit(cls) -> "HallExpr":
        """The empty word with coefficient 1."""
        return cls({(): Fraction(1)})

    @classmethod
    def symbol(cls, sym: HallSymbol, coeff: Fraction = Fraction(1)) -> "HallExpr":
        return cls({(sym,): Fraction(coeff)})

    @classmethod
    def word(cls, symbols: Iterable[HallSymbol], coeff: Fraction = Fraction(1)) -> "HallExpr":
        return cls({tuple(symbols): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Iterable[HallSymbol]) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def words(self) -> List[Word]:
        """Words in dump order: by length, then by symbols."""
        return sorted(self.terms, key=lambda w: (len(w), w))

    def __add__(self, other: "HallExpr") -> "HallExpr":
        result = dict(self.terms)
        for word, coeff in other.terms.items():
            result[word] = result.get(word, Fraction(0)) + coeff
        return HallExpr(result)

    def __neg__(self) -> "HallExpr":
        return self.scale(Fraction(-1))

    def __sub__(self, other: "HallExpr") -> "HallExpr":
        return self + (-other)

    def scale(self, factor: Fraction) -> "HallExpr":
        return HallExpr({w: c * factor for w, c in self.terms.items()})

    def __mul__(self, other: "HallExpr") -> "HallExpr":
        """Concatenation product, extended bilinearly."""
        result: Dict[Word, Fraction] = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                word = left + right
                result[word] = result.get(word, Fraction(0)) + a * b
        return HallExpr(result)

    def filter(self, keep: Callable[[Word], bool]) -> "HallExpr":
        """Drop every word failing ``keep``."""
        return HallExpr({w: c for w, c in self.terms.items() if keep(w)})

    def substitute(self, rule: SubstitutionRule) -> "HallExpr":
        """Replace each symbol by rule(symbol) and expand; None keeps the symbol."""
        cache: Dict[HallSymbol, HallExpr] = {}

        def image(sym: HallSymbol) -> HallExpr:
            if sym not in cache:
                replacement = rule(sym)
                cache[sym] = HallExpr.symbol(sym) if replacement is None else replacement
            return cache[sym]

        result = HallExpr.zero()
        for word, coeff in self.terms.items():
            expanded = HallExpr.unit().scale(coeff)
            for sym in word:
                expanded = expanded * image(sym)
            result = result + expanded
        return result

    def dump(self) -> str:
        """Deterministic text form, one word per line."""
        if not self.terms:
            return "0"
        lines = []
        for word in self.words():
            parts = [format_rational(self.terms[word])] + [sym.label() for sym in word]
            lines.append(" * ".join(parts))
        return "\n".join(lines)

    def __len__(self) -> int:
        return len(self.terms)
