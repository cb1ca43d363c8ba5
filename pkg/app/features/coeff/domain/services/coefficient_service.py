"""Coefficient service: the S and U transformation coefficients."""

from fractions import Fraction
from math import factorial
from typing import List, Sequence, Tuple

from app.core.shared.exceptions import PreconditionError, ValidationError
from app.core.utils.logger import get_logger
from app.features.coeff.domain.value_objects.ordered_surjection import OrderedSurjection
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.cone.domain.value_objects.num_class import NumClass, class_sum
from app.features.stability.domain.services.stability_service import StabilityService
from app.features.stability.domain.value_objects.phase_order import PhaseOrder
from app.features.stability.domain.value_objects.stability_param import StabilityParam

logger = get_logger(__name__)


class CoefficientService:
    """Domain service computing S({v_i}, Z, Z') and U({v_i}, Z, Z')."""

    def __init__(self, stability_service: StabilityService):
        self.stability_service = stability_service

    def surjections(self, l: int, m: int) -> List[OrderedSurjection]:
        """Weakly monotone surjections {1..l} -> {1..m}; binomial(l-1, m-1) of them."""
        return OrderedSurjection.all(l, m)

    def s_coeff(
        self,
        classes: Sequence[NumClass],
        k_z: StabilityParam,
        k_z_prime: StabilityParam,
        model: ConeModel,
    ) -> int:
        """S coefficient: (-1)^{#first-kind steps} if every step qualifies, else 0."""
        if not classes:
            raise PreconditionError("S needs a nonempty tuple")
        first_kind = 0
        for i in range(1, len(classes)):
            step = self.stability_service.compare(classes[i - 1], classes[i], k_z, model)
            split = self.stability_service.compare(
                _partial_sum(classes[:i]), _partial_sum(classes[i:]), k_z_prime, model
            )
            if step.is_le and split is PhaseOrder.GT:
                first_kind += 1
            elif step is PhaseOrder.GT and split.is_le:
                continue
            else:
                return 0
        return -1 if first_kind % 2 else 1

    def u_coeff(
        self,
        classes: Sequence[NumClass],
        k_z: StabilityParam,
        k_z_prime: StabilityParam,
        model: ConeModel,
    ) -> Fraction:
        """U coefficient as a double sum over nested monotone surjections."""
        if not classes:
            raise PreconditionError("U needs a nonempty tuple")
        compare = self.stability_service.compare
        total = _partial_sum(classes)
        l = len(classes)
        result = Fraction(0)

        for m in range(1, l + 1):
            for psi in self.surjections(l, m):
                blocks = psi.blocks(classes)
                if not all(
                    compare(block[0], other, k_z, model) is PhaseOrder.EQ
                    for block in blocks
                    for other in block[1:]
                ):
                    continue
                merged = [_partial_sum(block) for block in blocks]
                weight = psi.factorial_weight()

                for m_prime in range(1, m + 1):
                    for xi in self.surjections(m, m_prime):
                        groups = xi.blocks(merged)
                        if m_prime > 1 and not all(
                            compare(_partial_sum(group), total, k_z_prime, model)
                            is PhaseOrder.EQ
                            for group in groups
                        ):
                            continue
                        product = 1
                        for group in groups:
                            product *= self.s_coeff(group, k_z, k_z_prime, model)
                            if product == 0:
                                break
                        if product:
                            sign = 1 if m_prime % 2 else -1
                            result += sign * product * weight / m_prime
        logger.debug("u_coeff", length=l, k=str(k_z), k_prime=str(k_z_prime), value=str(result))
        return result

    def s_pattern_sign(
        self, classes: Sequence[NumClass], k: StabilityParam, model: ConeModel
    ) -> int:
        """Closed form of S at (k, 0) on tuples with exactly one rank -1 entry.

        (-1)^{e-1} when the torsion slopes ascend to -2k and then strictly
        descend: 0 < mu_1 <= ... <= mu_{e-1} <= -2k > mu_{e+1} > ... > mu_l >= 0.
        """
        e = _rank_position(classes)
        slopes = [
            None if i == e else self.stability_service.cone_service.torsion_slope(c, model)
            for i, c in enumerate(classes)
        ]
        threshold = k.rank_threshold
        left, right = slopes[:e], slopes[e + 1:]

        if left and (left[0] <= 0 or left[-1] > threshold):
            return 0
        if any(a > b for a, b in zip(left, left[1:])):
            return 0
        if right and (right[0] >= threshold or right[-1] < 0):
            return 0
        if any(a <= b for a, b in zip(right, right[1:])):
            return 0
        return -1 if e % 2 else 1

    def nonvanishing_pattern(
        self, classes: Sequence[NumClass], k: StabilityParam, model: ConeModel
    ) -> bool:
        """Necessary slope pattern for U at (k, 0) to be nonzero.

        0 <= mu_1 <= ... <= mu_{e-1} <= -2k >= mu_{e+1} >= ... >= mu_l >= 0.
        """
        e = _rank_position(classes)
        cone = self.stability_service.cone_service
        slopes = [cone.torsion_slope(c, model) for i, c in enumerate(classes) if i != e]
        left, right = slopes[:e], slopes[e:]
        chain = [Fraction(0)] + left + [k.rank_threshold]
        if any(a > b for a, b in zip(chain, chain[1:])):
            return False
        chain = [k.rank_threshold] + right + [Fraction(0)]
        return all(a >= b for a, b in zip(chain, chain[1:]))

    def u3_surjections(
        self, classes: Sequence[NumClass], k: StabilityParam, model: ConeModel
    ) -> List[Tuple[OrderedSurjection, int]]:
        """Surjections contributing to the specialized U at (k, 0), with their S sign.

        Blocks must have equal Z-phase, so torsion entries sharing the rank -1
        block have slope exactly -2k.
        """
        compare = self.stability_service.compare
        l = len(classes)
        contributing = []
        for m in range(1, l + 1):
            for psi in self.surjections(l, m):
                blocks = psi.blocks(classes)
                if not all(
                    compare(block[0], other, k, model) is PhaseOrder.EQ
                    for block in blocks
                    for other in block[1:]
                ):
                    continue
                sign = self.s_pattern_sign([_partial_sum(b) for b in blocks], k, model)
                if sign:
                    contributing.append((psi, sign))
        return contributing

    def u3_coeff(
        self, classes: Sequence[NumClass], k: StabilityParam, model: ConeModel
    ) -> Fraction:
        """Specialized U at (k, 0): sum of (-1)^{psi(e)-1} prod_b 1/|psi^{-1}(b)|!.

        Valid when every torsion entry has n_i != 0.
        """
        if k.k >= 0:
            raise PreconditionError(f"the specialized U needs k < 0, got k={k}")
        return sum(
            (sign * psi.factorial_weight() for psi, sign in self.u3_surjections(classes, k, model)),
            Fraction(0),
        )

    def elem_identity(self, l: int) -> Fraction:
        """sum over monotone surjections of (-1)^{l-m} prod_b 1/|psi^{-1}(b)|!; equals 1/l!."""
        if l < 1:
            raise PreconditionError("elem_identity needs l >= 1")
        total = Fraction(0)
        for m in range(1, l + 1):
            sign = -1 if (l - m) % 2 else 1
            for psi in self.surjections(l, m):
                total += sign * psi.factorial_weight()
        return total

    @staticmethod
    def expected_elem_identity(l: int) -> Fraction:
        return Fraction(1, factorial(l))


def _partial_sum(classes: Sequence[NumClass]) -> NumClass:
    try:
        return class_sum(classes)
    except ValidationError as exc:
        raise PreconditionError(f"intermediate sum is not a valid class: {exc.message}")


def _rank_position(classes: Sequence[NumClass]) -> int:
    positions = [i for i, c in enumerate(classes) if c.is_rank]
    if len(positions) != 1:
        raise PreconditionError("expected exactly one rank -1 entry")
    return positions[0]
