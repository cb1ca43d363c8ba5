"""Use case executing the delta/epsilon identities and their round trips."""

from dataclasses import dataclass

from app.core.utils.logger import get_logger
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.cone.domain.value_objects.num_class import NumClass
from app.features.hall.domain.services.hall_service import HallService
from app.features.hall.domain.value_objects.generator_set import GeneratorSet
from app.features.hall.domain.value_objects.hall_expr import HallExpr, HallSymbol, SymbolKind
from app.features.hall.domain.value_objects.identity_check import IdentityCheck, IdentityReport
from app.features.stability.domain.value_objects.stability_param import StabilityParam

logger = get_logger(__name__)


@dataclass
class VerifyHallIdentitiesRequest:
    """Request for a Hall identity run across one change of stability."""
    model: ConeModel
    generators: GeneratorSet
    v: NumClass
    k_z: StabilityParam
    k_z_prime: StabilityParam


class VerifyHallIdentitiesUseCase:
    """Run every delta/epsilon identity for one class and pair of stability parameters."""

    def __init__(self, hall_service: HallService):
        self.hall_service = hall_service

    def execute(self, request: VerifyHallIdentitiesRequest) -> IdentityReport:
        """Execute the identity checks."""
        hall = self.hall_service
        model, gens, v = request.model, request.generators, request.v
        k_z, k_z_prime = request.k_z, request.k_z_prime

        delta_z = HallExpr.symbol(HallSymbol(SymbolKind.DELTA, v, k_z.k))
        delta_z_prime = HallExpr.symbol(HallSymbol(SymbolKind.DELTA, v, k_z_prime.k))
        eps_z = HallExpr.symbol(HallSymbol(SymbolKind.EPS, v, k_z.k))

        def eps_of(k):
            return lambda w: hall.eps_from_delta(w, gens, k, model)

        def delta_of(k):
            return lambda w: hall.delta_from_eps(w, gens, k, model)

        def forward(w):
            return hall.transform_delta(w, gens, k_z, k_z_prime, model)

        def backward(w):
            return hall.invert_delta(w, gens, k_z, k_z_prime, model)

        transformed = forward(v)
        inverted = backward(v)
        transformed_eps = hall.transform_eps(v, gens, k_z, k_z_prime, model)
        s_path = hall.s_expand(v, gens, k_z, k_z_prime, model)

        checks = [
            IdentityCheck(
                "delta_eps_roundtrip",
                delta_z,
                hall.substitute(
                    hall.delta_from_eps(v, gens, k_z, model),
                    hall.rule(SymbolKind.EPS, k_z, eps_of(k_z)),
                    gens,
                ),
            ),
            IdentityCheck(
                "eps_delta_roundtrip",
                eps_z,
                hall.substitute(
                    hall.eps_from_delta(v, gens, k_z, model),
                    hall.rule(SymbolKind.DELTA, k_z, delta_of(k_z)),
                    gens,
                ),
            ),
            IdentityCheck(
                "transform_then_invert",
                delta_z,
                hall.substitute(inverted, hall.rule(SymbolKind.DELTA, k_z_prime, forward), gens),
            ),
            IdentityCheck(
                "invert_then_transform",
                delta_z_prime,
                hall.substitute(transformed, hall.rule(SymbolKind.DELTA, k_z, backward), gens),
            ),
            IdentityCheck(
                "eps_identity",
                eps_z,
                hall.transform_eps(v, gens, k_z, k_z, model),
            ),
            IdentityCheck(
                "eps_composite",
                transformed_eps,
                hall.substitute(
                    hall.substitute(
                        hall.eps_from_delta(v, gens, k_z_prime, model),
                        hall.rule(SymbolKind.DELTA, k_z_prime, forward),
                        gens,
                    ),
                    hall.rule(SymbolKind.DELTA, k_z, delta_of(k_z)),
                    gens,
                ),
            ),
            IdentityCheck("s_path", transformed, s_path),
        ]
        report = IdentityReport(
            checks=tuple(checks),
            expressions=(
                ("transform_delta", transformed),
                ("invert_delta", inverted),
                ("transform_eps", transformed_eps),
                ("s_expand", s_path),
            ),
        )
        logger.info(
            "hall identities verified",
            v=v.label(),
            k=k_z.to_str(),
            k_prime=k_z_prime.to_str(),
            passed=report.passed,
            failures=report.failures(),
        )
        return report
