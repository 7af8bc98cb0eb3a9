import os
import random

import pytest

from sspwalk.field import PrimeField

SLOW_TESTS_ENV = "SSPWALK_SLOW_TESTS"


def pytest_collection_modifyitems(config, items):
    """skip tests marked slow unless requested via the environment"""
    if os.environ.get(SLOW_TESTS_ENV, "0") == "1":
        return
    skip_slow = pytest.mark.skip(reason=f"set {SLOW_TESTS_ENV}=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope='session')
def f11():
    yield PrimeField(11)


@pytest.fixture(scope='session')
def f13():
    yield PrimeField(13)


@pytest.fixture
def rng():
    yield random.Random(0)


@pytest.fixture(scope='session')
def seeds11(f11):
    from sspwalk.seeds import supersingular_lambdas
    yield supersingular_lambdas(f11)


@pytest.fixture(scope='session')
def e3_theta11(seeds11):
    """null-point of E x E x E for the first supersingular curve at p=11"""
    from sspwalk.seeds import product_theta
    e = seeds11[0].theta
    yield product_theta(e, product_theta(e, e))


@pytest.fixture(scope='session')
def neighbours11(e3_theta11):
    """codomains of all 135 isogenies leaving E x E x E at p=11"""
    from sspwalk.symplectic import act
    from sspwalk.symplectic import coset_reps
    from sspwalk.theta import isogeny_step
    yield [isogeny_step(act(rep, e3_theta11)) for rep in coset_reps(3).reps]


@pytest.fixture(scope='session')
def genus2_11(f11):
    from sspwalk.enumeration import enumerate_dim2
    yield enumerate_dim2(f11)


@pytest.fixture(scope='session')
def enumeration11(f11):
    from sspwalk.enumeration import enumerate_dim3
    yield enumerate_dim3(f11, threads=1, checkpoint_every=0, debug_checks=True)


@pytest.fixture(scope='session')
def enumeration13(f13):
    from sspwalk.enumeration import enumerate_dim3
    yield enumerate_dim3(f13, threads=1, checkpoint_every=0)


@pytest.fixture(scope='session')
def quartic_nodes11(enumeration11):
    yield [r for r in enumeration11.records if r.kind.n_van == 0]


@pytest.fixture(scope='session')
def hyperelliptic_nodes11(enumeration11):
    yield [r for r in enumeration11.records if r.kind.n_van == 1]
