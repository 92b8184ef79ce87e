import pytest

from shufflesc import MonsterLetter, Transformation


@pytest.fixture(scope="session")
def fig1_letters():
    """The worked 4x3 example letters; unspecified values completed with
    the identity (they never act on an occupied row or column here)."""
    t = Transformation
    a = MonsterLetter(t.from_map(4, {0: 2}), t.from_map(3, {0: 1}))
    b = MonsterLetter(t.from_map(4, {0: 0, 2: 3}), t.from_map(3, {0: 2, 1: 0}))
    c = MonsterLetter(t.from_map(4, {0: 2, 2: 3, 3: 3}), t.from_map(3, {0: 2, 1: 2, 2: 1}))
    return a, b, c
