"""Dependency injection container configuration."""

from dependency_injector import containers, providers

# Domain services
from app.features.cone.domain.services.cone_service import ConeService
from app.features.stability.domain.services.stability_service import StabilityService
from app.features.coeff.domain.services.coefficient_service import CoefficientService
from app.features.hall.domain.services.hall_service import HallService
from app.features.integrate.domain.services.tree_service import TreeService
from app.features.integrate.domain.services.wall_crossing_service import WallCrossingService
from app.features.series.domain.services.series_service import SeriesService

# Use cases
from app.features.cone.application.use_cases.list_decompositions_use_case import ListDecompositionsUseCase
from app.features.stability.application.use_cases.describe_walls_use_case import DescribeWallsUseCase
from app.features.coeff.application.use_cases.compute_coefficient_use_case import ComputeCoefficientUseCase
from app.features.hall.application.use_cases.verify_hall_identities_use_case import VerifyHallIdentitiesUseCase
from app.features.integrate.application.use_cases.transform_table_use_case import TransformTableUseCase
from app.features.series.application.use_cases.build_series_use_case import BuildSeriesUseCase
from app.features.series.application.use_cases.verify_roundtrip_use_case import VerifyRoundtripUseCase
from app.features.cli.application.use_cases.run_selftest_use_case import RunSelftestUseCase


class Container(containers.DeclarativeContainer):
    """IoC container for dependency injection."""

    # Domain services
    cone_service = providers.Singleton(ConeService)

    stability_service = providers.Singleton(
        StabilityService,
        cone_service=cone_service
    )

    coefficient_service = providers.Singleton(
        CoefficientService,
        stability_service=stability_service
    )

    hall_service = providers.Singleton(
        HallService,
        cone_service=cone_service,
        stability_service=stability_service,
        coefficient_service=coefficient_service
    )

    tree_service = providers.Singleton(TreeService)

    wall_crossing_service = providers.Singleton(
        WallCrossingService,
        cone_service=cone_service,
        coefficient_service=coefficient_service,
        tree_service=tree_service
    )

    series_service = providers.Singleton(
        SeriesService,
        cone_service=cone_service
    )

    # Use cases
    list_decompositions_use_case = providers.Factory(
        ListDecompositionsUseCase,
        cone_service=cone_service
    )

    describe_walls_use_case = providers.Factory(
        DescribeWallsUseCase,
        stability_service=stability_service
    )

    compute_coefficient_use_case = providers.Factory(
        ComputeCoefficientUseCase,
        coefficient_service=coefficient_service
    )

    verify_hall_identities_use_case = providers.Factory(
        VerifyHallIdentitiesUseCase,
        hall_service=hall_service
    )

    transform_table_use_case = providers.Factory(
        TransformTableUseCase,
        wall_crossing_service=wall_crossing_service
    )

    build_series_use_case = providers.Factory(
        BuildSeriesUseCase,
        series_service=series_service
    )

    verify_roundtrip_use_case = providers.Factory(
        VerifyRoundtripUseCase,
        cone_service=cone_service,
        wall_crossing_service=wall_crossing_service,
        series_service=series_service
    )

    run_selftest_use_case = providers.Factory(
        RunSelftestUseCase,
        stability_service=stability_service,
        coefficient_service=coefficient_service,
        tree_service=tree_service,
        wall_crossing_service=wall_crossing_service,
        series_service=series_service,
        verify_hall_identities_use_case=verify_hall_identities_use_case,
        verify_roundtrip_use_case=verify_roundtrip_use_case,
        describe_walls_use_case=describe_walls_use_case
    )


# Global container instance
container = Container()
