"""Pytest configuration and shared fixtures for symprod tests."""

import pytest

from symprod.core.config import SymprodConfig
from symprod.groups.permgroup import PermGroup
from tests.fixtures.groups import (
    make_alternating,
    make_config,
    make_cyclic,
    make_dihedral,
    make_quaternion,
    make_symmetric,
)


@pytest.fixture
def sym2() -> PermGroup:
    """Provide Sym(2)."""
    return make_symmetric(2)


@pytest.fixture
def sym3() -> PermGroup:
    """Provide Sym(3)."""
    return make_symmetric(3)


@pytest.fixture
def sym4() -> PermGroup:
    """Provide Sym(4)."""
    return make_symmetric(4)


@pytest.fixture
def alt4() -> PermGroup:
    """Provide Alt(4)."""
    return make_alternating(4)


@pytest.fixture
def alt5() -> PermGroup:
    """Provide Alt(5)."""
    return make_alternating(5)


@pytest.fixture
def cyclic4() -> PermGroup:
    """Provide Cyclic(4)."""
    return make_cyclic(4)


@pytest.fixture
def dihedral4() -> PermGroup:
    """Provide the dihedral group of order 8."""
    return make_dihedral(4)


@pytest.fixture
def quaternion() -> PermGroup:
    """Provide the quaternion group of order 8."""
    return make_quaternion()


@pytest.fixture
def default_config() -> SymprodConfig:
    """Provide a default configuration."""
    return make_config()
