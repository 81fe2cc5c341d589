import pytest

from adjminors import MinorSet

# the four-generator configuration whose companion graph is a 4-cycle
CYCLE4_CELLS = [(1, 2), (2, 3), (3, 2), (2, 1)]

# the smallest configuration whose companion graph is a chordless 8-cycle
CYCLE8_CELLS = [(1, 3), (2, 4), (3, 5), (4, 4), (5, 3), (4, 2), (3, 1), (2, 2)]


@pytest.fixture
def cycle4_set() -> MinorSet:
    return MinorSet.of(4, 4, CYCLE4_CELLS)


@pytest.fixture
def cycle8_set() -> MinorSet:
    return MinorSet.of(6, 6, CYCLE8_CELLS)
