"""Shared pytest fixtures."""

import pytest

from app.core.shared.container import Container
from app.features.cone.domain.entities.cone_model import ConeModel
from app.features.series.domain.services.table_generator import micro_model
from tests.fixtures.factories import line_model


@pytest.fixture
def container():
    """Fresh container per test."""
    return Container()


@pytest.fixture
def cone_service(container):
    return container.cone_service()


@pytest.fixture
def stability_service(container):
    return container.stability_service()


@pytest.fixture
def coefficient_service(container):
    return container.coefficient_service()


@pytest.fixture
def hall_service(container):
    return container.hall_service()


@pytest.fixture
def tree_service(container):
    return container.tree_service()


@pytest.fixture
def wall_crossing_service(container):
    return container.wall_crossing_service()


@pytest.fixture
def series_service(container):
    return container.series_service()


@pytest.fixture
def model() -> ConeModel:
    """Rank 1 cone, omega = (1), tables up to beta = (3)."""
    return line_model(3)


@pytest.fixture
def plane_model() -> ConeModel:
    """Rank 2 cone with omega = (1, 2)."""
    return ConeModel.create(omega=(1, 2), beta_bound=(2, 2))


@pytest.fixture
def micro():
    """d = 1, N = 1, P_{n,(1)} = n + 2 [n = 0] on [-6, 6]."""
    return micro_model(1, 2, (-6, 6))
