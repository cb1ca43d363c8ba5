"""Cone service: degrees, pairings, slopes and finite class enumerations."""

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import List, Optional, Sequence, Tuple

from app.core.shared.exceptions import DomainError, PreconditionError
from app.core.utils.logger import get_logger
from app.features.cone.domain.entities.cone_model import Beta, ConeModel, classes_in_box
from app.features.cone.domain.value_objects.num_class import NumClass
from app.features.cone.domain.value_objects.slope import Slope
from app.features.stability.domain.value_objects.stability_param import StabilityParam

logger = get_logger(__name__)

Decomposition = Tuple[NumClass, ...]


@lru_cache(maxsize=None)
def _beta_compositions(rest: Beta) -> Tuple[Tuple[Beta, ...], ...]:
    """Ordered sequences of nonzero effective classes summing to rest."""
    if not any(rest):
        return ((),)
    result = []
    for first in classes_in_box(rest):
        if not any(first):
            continue
        remainder = tuple(a - b for a, b in zip(rest, first))
        for tail in _beta_compositions(remainder):
            result.append((first,) + tail)
    return tuple(result)


class ConeService:
    """Domain service for the numerical lattice of the cone model."""

    def deg(self, beta: Sequence[int], model: ConeModel) -> int:
        """Degree omega . beta of an effective class."""
        beta = model.check_beta(beta)
        return sum(w * b for w, b in zip(model.omega, beta))

    def euler_pairing(self, v: NumClass, w: NumClass) -> int:
        """Antisymmetric Euler pairing chi(v, w) = r_v n_w - r_w n_v."""
        return v.r * w.n - w.r * v.n

    def dual(self, v: NumClass) -> NumClass:
        return v.dual()

    def slope(self, v: NumClass, model: ConeModel) -> Slope:
        """Slope n / (omega . beta), infinite for rank -1 classes."""
        if v.is_rank:
            return Slope.infinite()
        return Slope.finite(v.n, self.deg(v.beta, model))

    def torsion_slope(self, v: NumClass, model: ConeModel) -> Fraction:
        """Finite slope of a torsion class."""
        if not v.is_torsion:
            raise PreconditionError(f"{v} is not a torsion class")
        return Fraction(v.n, self.deg(v.beta, model))

    def effective_classes_below(
        self, beta: Sequence[int], include_zero: bool = True
    ) -> List[Beta]:
        """All beta' with 0 <= beta' <= beta, lexicographically ordered."""
        classes = classes_in_box(tuple(beta))
        if include_zero:
            return classes
        return [c for c in classes if any(c)]

    def mu_n_beta(self, n: int, beta: Sequence[int], model: ConeModel) -> Fraction:
        """max over 0 < beta' <= beta of (n - m(beta - beta')) / (omega . beta')."""
        beta = model.check_beta(beta)
        if not any(beta):
            raise DomainError("mu_{n,beta} is undefined at beta = 0")
        return max(
            Fraction(n - model.m(_minus(beta, sub)), self.deg(sub, model))
            for sub in self.effective_classes_below(beta, include_zero=False)
        )

    def decompositions(
        self, v: NumClass, k: StabilityParam, model: ConeModel
    ) -> List[Decomposition]:
        """Ordered decompositions of a rank -1 class into one rank -1 part and torsion parts.

        Every torsion part has slope in [0, -2k].
        """
        if k.k >= 0:
            raise PreconditionError(f"decompositions need k < 0, got k={k}")
        return self.decompositions_in_window(v, Fraction(0), k.rank_threshold, model)

    def decompositions_in_window(
        self, v: NumClass, low: Fraction, high: Fraction, model: ConeModel
    ) -> List[Decomposition]:
        """Decompositions of a rank -1 class whose torsion slopes lie in [low, high]."""
        if not v.is_rank:
            raise PreconditionError(f"decompositions need a rank -1 class, got {v}")
        if low > high:
            raise PreconditionError(f"empty slope window [{low}, {high}]")
        beta = model.check_beta(v.beta)

        found = set()
        for beta_e in self.effective_classes_below(beta):
            rest = _minus(beta, beta_e)
            for betas in _beta_compositions(rest):
                ranges = [
                    range(
                        math.ceil(low * self.deg(b, model)),
                        math.floor(high * self.deg(b, model)) + 1,
                    )
                    for b in betas
                ]
                for ns in product(*ranges):
                    n_e = v.n - sum(ns)
                    if not NumClass.is_valid(-1, beta_e, n_e):
                        continue
                    rank_part = NumClass(r=-1, beta=beta_e, n=n_e)
                    torsion = [NumClass(r=0, beta=b, n=n) for b, n in zip(betas, ns)]
                    for e in range(len(torsion) + 1):
                        found.add(tuple(torsion[:e] + [rank_part] + torsion[e:]))

        result = sorted(found)
        logger.debug("decompositions", v=str(v), low=str(low), high=str(high), count=len(result))
        return result

    def ordered_decompositions(
        self,
        v: NumClass,
        parts: Sequence[NumClass],
        max_length: Optional[int] = None,
    ) -> List[Decomposition]:
        """Ordered tuples of classes from ``parts`` summing to v."""
        candidates = sorted(set(parts))
        memo = {}

        def expand(r: int, beta: Beta, n: int) -> List[Decomposition]:
            if r == 0 and not any(beta):
                return [()] if n == 0 else []
            key = (r, beta, n)
            if key in memo:
                return memo[key]
            found: List[Decomposition] = []
            for part in candidates:
                r_rest = r - part.r
                if r_rest not in (0, -1):
                    continue
                beta_rest = _minus(beta, part.beta)
                if any(b < 0 for b in beta_rest):
                    continue
                for tail in expand(r_rest, beta_rest, n - part.n):
                    found.append((part,) + tail)
            memo[key] = found
            return found

        result = expand(v.r, v.beta, v.n)
        if max_length is not None:
            result = [d for d in result if len(d) <= max_length]
        return sorted(result)

    def finite_support_bound(
        self, beta: Sequence[int], k: StabilityParam, model: ConeModel
    ) -> int:
        """Lower bound below which L_{n,beta}(sigma_k) vanishes.

        min(N(beta), min over 0 < beta' <= beta of ceil(-2k omega.beta' + m(beta - beta'))).
        """
        beta = model.check_beta(beta)
        if not any(beta):
            return 0
        bounds = [
            math.ceil(k.rank_threshold * self.deg(sub, model) + model.m(_minus(beta, sub)))
            for sub in self.effective_classes_below(beta, include_zero=False)
        ]
        return min(model.n_floor(beta), min(bounds))


def _minus(a: Sequence[int], b: Sequence[int]) -> Beta:
    return tuple(x - y for x, y in zip(a, b))
