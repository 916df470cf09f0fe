import random

import pytest

from src.config import RANDOM_SEED
from src.network import ex6 as build_ex6
from src.network import ex6_renamed as build_ex6_renamed
from src.network import g2 as build_g2
from src.network import random_graph, random_network
from src.semigroup import Carrier, enumerate_ball, parse_element


@pytest.fixture(scope="session")
def ex6():
    return build_ex6()


@pytest.fixture(scope="session")
def ex6_renamed():
    return build_ex6_renamed()


@pytest.fixture(scope="session")
def g2():
    return build_g2()


@pytest.fixture(scope="session")
def ball4(ex6):
    return enumerate_ball(ex6, 4, Carrier.Q)


@pytest.fixture(scope="session")
def ball3(ex6):
    return enumerate_ball(ex6, 3, Carrier.Q)


@pytest.fixture(scope="session")
def s_ball4(ex6):
    return enumerate_ball(ex6, 4, Carrier.S)


@pytest.fixture(scope="session")
def r_ball4(ex6):
    return enumerate_ball(ex6, 4, Carrier.R)


@pytest.fixture(scope="session")
def random_networks():
    rng = random.Random(RANDOM_SEED)
    return [random_network(rng) for _ in range(50)]


@pytest.fixture(scope="session")
def small_random_networks():
    rng = random.Random(RANDOM_SEED + 1)
    return [random_network(rng, max_vertices=5, max_relations=3) for _ in range(20)]


@pytest.fixture(scope="session")
def random_graphs():
    rng = random.Random(RANDOM_SEED + 2)
    return [random_graph(rng) for _ in range(10)]


@pytest.fixture
def el(ex6):
    """Parse an EX6 element from text."""
    return lambda text: parse_element(ex6, text)
