"""Value object for the truncated set of Hall algebra generators."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from app.core.shared.exceptions import ValidationError
from app.features.cone.domain.value_objects.num_class import NumClass, raw_sum
from app.features.hall.domain.value_objects.hall_expr import Word


@dataclass(frozen=True)
class GeneratorSet:
    """Seed classes and the truncation class v_max.

    A class is retained iff its rank is 0 or -1 and its beta is <= v_max.beta.
    """

    seeds: Tuple[NumClass, ...]
    v_max: NumClass
    max_word_length: Optional[int] = None
    _closure: List[NumClass] = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate generators after initialization."""
        if not self.seeds:
            raise ValidationError("a generator set needs at least one seed class")
        if len(set(self.seeds)) != len(self.seeds):
            raise ValidationError("seed classes must be distinct")
        for seed in self.seeds:
            if seed.dimension != self.v_max.dimension:
                raise ValidationError(f"seed {seed} has the wrong cone rank")
            if not self.retains(seed.r, seed.beta):
                raise ValidationError(f"seed {seed} exceeds the truncation class {self.v_max}")
        if self.max_word_length is not None and self.max_word_length < 1:
            raise ValidationError("max_word_length must be positive")

    @classmethod
    def create(
        cls,
        seeds: Sequence[NumClass],
        v_max: NumClass,
        max_word_length: Optional[int] = None,
    ) -> "GeneratorSet":
        return cls(seeds=tuple(sorted(set(seeds))), v_max=v_max, max_word_length=max_word_length)

    def retains(self, r: int, beta: Sequence[int]) -> bool:
        """Check if a class of rank r and curve class beta survives truncation."""
        return r in (0, -1) and all(b <= c for b, c in zip(beta, self.v_max.beta))

    def retains_word(self, word: Word) -> bool:
        """Check if a word survives truncation: class-sum retained, length within bound."""
        if not word:
            return True
        if self.max_word_length is not None and len(word) > self.max_word_length:
            return False
        r, beta, n = raw_sum([sym.cls for sym in word])
        return NumClass.is_valid(r, beta, n) and self.retains(r, beta)

    def closure(self) -> List[NumClass]:
        """All retained valid classes that are sums of seeds, sorted."""
        if self._closure:
            return list(self._closure)
        found = set(self.seeds)
        frontier = list(self.seeds)
        while frontier:
            next_frontier = []
            for cls in frontier:
                for seed in self.seeds:
                    r, beta, n = raw_sum([cls, seed])
                    if not (NumClass.is_valid(r, beta, n) and self.retains(r, beta)):
                        continue
                    total = NumClass(r=r, beta=beta, n=n)
                    if total not in found:
                        found.add(total)
                        next_frontier.append(total)
            frontier = next_frontier
        self._closure.extend(sorted(found))
        return list(self._closure)

    def parts_below(self, v: NumClass) -> List[NumClass]:
        """Closure classes that can occur as a part of v."""
        return [c for c in self.closure() if all(a <= b for a, b in zip(c.beta, v.beta))]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seeds": [s.to_list() for s in self.seeds],
            "v_max": self.v_max.to_list(),
            "max_word_length": self.max_word_length,
            "closure_size": len(self.closure()),
        }
