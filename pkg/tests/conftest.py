import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from safevote import Belief, VotingInstance

FIXTURES = Path(__file__).parent / "fixtures"


def make_example1():
    """Five proposals, three agents; the running example of the docs:
    p1 unsafe, p2..p5 safe, agent 2 the only useful education target.
    """
    return VotingInstance(
        5,
        [
            Belief(frozenset({1, 2, 3}), frozenset({0, 2, 4})),
            Belief(frozenset({1, 2}), frozenset({1, 2, 3, 4})),
            Belief(frozenset({0, 1, 2}), frozenset(range(5))),
        ],
    )


@pytest.fixture
def example1():
    return make_example1()


@pytest.fixture
def fixtures_dir():
    return FIXTURES
