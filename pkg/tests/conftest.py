import random

import pytest

from ultraseq import spaces, weights


@pytest.fixture
def rng():
    return random.Random(905)


@pytest.fixture(scope="session")
def colombeau():
    return spaces.colombeau_space()


@pytest.fixture(scope="session")
def infra():
    return spaces.infra_space()


@pytest.fixture(scope="session")
def egorov():
    return spaces.NumberSpace(family=weights.catalog("egorov"), mode=weights.Mode.STANDARD)
