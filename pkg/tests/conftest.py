import random

import pytest
from hypothesis import HealthCheck, settings

from hecke_fusion.field import QQ, frac_field
from hecke_fusion.hecke import generic_algebra

settings.register_profile(
    "exact", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def Kq():
    return frac_field(QQ, "q")


@pytest.fixture(scope="session")
def q(Kq):
    return Kq.gen()


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(scope="session")
def A():
    """Generic algebras by rank."""
    return {n: generic_algebra(n) for n in range(1, 7)}
