import pytest

from podles.calculus import Calculus
from podles.verify import BlockSet


@pytest.fixture(scope="session")
def calc() -> Calculus:
    return Calculus()


@pytest.fixture(scope="session")
def blocks(calc: Calculus) -> BlockSet:
    return BlockSet(calc)
