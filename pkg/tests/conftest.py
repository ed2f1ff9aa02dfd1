"""
Pytest configuration and shared fixtures for the spin code engine tests.
"""
import pytest
import numpy as np

from spincodes.core.config import get_settings
from spincodes.features.angular import HalfInt
from spincodes.features.bindihedral import Irrep
from spincodes.features.families import code1, family_d3
from spincodes.models.schemas import SearchConfig


# ============================================================================
# Settings Fixtures
# ============================================================================

@pytest.fixture
def settings():
    """Cached application settings."""
    return get_settings()


@pytest.fixture
def search_config():
    """Small, single-threaded search configuration."""
    return SearchConfig(restarts=32, max_iterations=200, tolerance=1e-12, rng_seed=7, max_workers=1)


# ============================================================================
# Code Fixtures
# ============================================================================

@pytest.fixture
def rep43():
    """delta_3 of BD_8 (the ((11,2,3)) irrep)."""
    return Irrep(4, 3)


@pytest.fixture
def spin_code11(rep43):
    """Spin preimage of the ((11,2,3)) code at j = 11/2."""
    return family_d3(rep43, HalfInt(11))


@pytest.fixture
def code11():
    """The ((11,2,3)) code of BD_8."""
    return code1(4)


@pytest.fixture
def code13():
    """The ((13,2,3)) code of BD_10."""
    return code1(5)


@pytest.fixture
def rng():
    """Deterministic generator for property-style tests."""
    return np.random.default_rng(12345)
