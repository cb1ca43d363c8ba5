"""Hall service: delta/epsilon identities and transformation formulas."""

from fractions import Fraction
from math import factorial
from typing import Callable, List, Optional

from app.core.shared.exceptions import PreconditionError
from app.core.utils.logger import get_logger
from app.features.coeff.domain.services.coefficient_service import CoefficientService
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.cone.domain.services.cone_service import ConeService, Decomposition
from app.features.cone.domain.value_objects.num_class import NumClass, class_sum
from app.features.hall.domain.value_objects.generator_set import GeneratorSet
from app.features.hall.domain.value_objects.hall_expr import (
    HallExpr,
    HallSymbol,
    SubstitutionRule,
    SymbolKind,
)
from app.features.stability.domain.services.stability_service import StabilityService
from app.features.stability.domain.value_objects.phase_order import PhaseOrder
from app.features.stability.domain.value_objects.stability_param import StabilityParam

logger = get_logger(__name__)


class HallService:
    """Domain service executing identities in the truncated Hall algebra."""

    def __init__(
        self,
        cone_service: ConeService,
        stability_service: StabilityService,
        coefficient_service: CoefficientService,
    ):
        self.cone_service = cone_service
        self.stability_service = stability_service
        self.coefficient_service = coefficient_service

    def decompositions(self, v: NumClass, gens: GeneratorSet) -> List[Decomposition]:
        """Ordered decompositions of v into closure classes."""
        return self.cone_service.ordered_decompositions(
            v, gens.parts_below(v), max_length=gens.max_word_length
        )

    def eps_from_delta(
        self, v: NumClass, gens: GeneratorSet, k: StabilityParam, model: ConeModel
    ) -> HallExpr:
        """epsilon^v(Z) = sum over same-phase decompositions of (-1)^{l-1}/l delta words."""
        terms = {}
        for parts in self._same_phase(v, gens, k, model):
            l = len(parts)
            sign = 1 if l % 2 else -1
            terms[_word(SymbolKind.DELTA, parts, k)] = Fraction(sign, l)
        return HallExpr(terms)

    def delta_from_eps(
        self, v: NumClass, gens: GeneratorSet, k: StabilityParam, model: ConeModel
    ) -> HallExpr:
        """delta^v(Z) = sum over same-phase decompositions of 1/l! epsilon words."""
        terms = {}
        for parts in self._same_phase(v, gens, k, model):
            terms[_word(SymbolKind.EPS, parts, k)] = Fraction(1, factorial(len(parts)))
        return HallExpr(terms)

    def transform_delta(
        self,
        v: NumClass,
        gens: GeneratorSet,
        k_z: StabilityParam,
        k_z_prime: StabilityParam,
        model: ConeModel,
    ) -> HallExpr:
        """delta^v(Z') as a sum of delta(Z) words with strictly descending Z-phases."""
        self._require_dominance(v, gens, k_z, k_z_prime, model)
        compare = self.stability_service.compare
        terms = {}
        for parts in self._same_phase(v, gens, k_z_prime, model):
            if all(
                compare(a, b, k_z, model) is PhaseOrder.GT for a, b in zip(parts, parts[1:])
            ):
                terms[_word(SymbolKind.DELTA, parts, k_z)] = Fraction(1)
        return HallExpr(terms)

    def invert_delta(
        self,
        v: NumClass,
        gens: GeneratorSet,
        k_z: StabilityParam,
        k_z_prime: StabilityParam,
        model: ConeModel,
    ) -> HallExpr:
        """delta^v(Z) in delta(Z') words; every split has Z(left sum) > Z(right sum).

        Coefficient (-1)^{l-1}.
        """
        self._require_dominance(v, gens, k_z, k_z_prime, model)
        compare = self.stability_service.compare
        terms = {}
        for parts in self._same_phase(v, gens, k_z_prime, model):
            if all(
                compare(class_sum(parts[:i]), class_sum(parts[i:]), k_z, model)
                is PhaseOrder.GT
                for i in range(1, len(parts))
            ):
                sign = 1 if len(parts) % 2 else -1
                terms[_word(SymbolKind.DELTA, parts, k_z_prime)] = Fraction(sign)
        return HallExpr(terms)

    def transform_eps(
        self,
        v: NumClass,
        gens: GeneratorSet,
        k_z: StabilityParam,
        k_z_prime: StabilityParam,
        model: ConeModel,
    ) -> HallExpr:
        """epsilon^v(Z') = sum of U({v_i}, Z, Z') epsilon(Z) words."""
        self._require_dominance(v, gens, k_z, k_z_prime, model)
        terms = {}
        for parts in self.decompositions(v, gens):
            coeff = self.coefficient_service.u_coeff(parts, k_z, k_z_prime, model)
            if coeff:
                terms[_word(SymbolKind.EPS, parts, k_z)] = coeff
        logger.debug("transform_eps", v=str(v), words=len(terms))
        return HallExpr(terms)

    def s_expand(
        self,
        v: NumClass,
        gens: GeneratorSet,
        k_z: StabilityParam,
        k_z_prime: StabilityParam,
        model: ConeModel,
    ) -> HallExpr:
        """delta^v(Z') = sum of S({v_i}, Z, Z') delta(Z) words over all decompositions."""
        terms = {}
        for parts in self.decompositions(v, gens):
            coeff = self.coefficient_service.s_coeff(parts, k_z, k_z_prime, model)
            if coeff:
                terms[_word(SymbolKind.DELTA, parts, k_z)] = Fraction(coeff)
        return HallExpr(terms)

    def substitute(
        self, expr: HallExpr, rule: SubstitutionRule, gens: GeneratorSet
    ) -> HallExpr:
        """Replace symbols by expressions, expand and truncate."""
        return expr.substitute(rule).filter(gens.retains_word)

    def rule(
        self,
        kind: SymbolKind,
        k: StabilityParam,
        expand: Callable[[NumClass], HallExpr],
    ) -> SubstitutionRule:
        """Substitution rule rewriting every (kind, k) symbol with ``expand``."""

        def apply(sym: HallSymbol) -> Optional[HallExpr]:
            if sym.kind is kind and sym.k == k.k:
                return expand(sym.cls)
            return None

        return apply

    def _same_phase(
        self, v: NumClass, gens: GeneratorSet, k: StabilityParam, model: ConeModel
    ) -> List[Decomposition]:
        compare = self.stability_service.compare
        return [
            parts
            for parts in self.decompositions(v, gens)
            if all(compare(part, v, k, model) is PhaseOrder.EQ for part in parts)
        ]

    def _require_dominance(
        self,
        v: NumClass,
        gens: GeneratorSet,
        k_z: StabilityParam,
        k_z_prime: StabilityParam,
        model: ConeModel,
    ) -> None:
        classes = gens.parts_below(v) + [v]
        violation = self.stability_service.find_dominance_violation(
            k_z, k_z_prime, classes, model
        )
        if violation:
            a, b = violation
            raise PreconditionError(
                f"k'={k_z_prime} does not dominate k={k_z}: Z({a}) >= Z({b}) is not preserved"
            )


def _word(kind: SymbolKind, parts: Decomposition, k: StabilityParam):
    return tuple(HallSymbol(kind=kind, cls=part, k=k.k) for part in parts)
