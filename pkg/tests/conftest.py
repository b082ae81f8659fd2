import pytest

from sturm import SturmPermutation, build_model, enumerate_sturm

# Seven-crossing workhorse example used throughout the suite.
PERM7 = (1, 4, 5, 6, 3, 2, 7)

# Fifteen-crossing completion of the twelve-label window template, with
# the reference equilibrium at label 3 (axis position 13, Morse number 2).
PERM15 = (1, 14, 13, 6, 5, 4, 7, 12, 11, 8, 9, 10, 3, 2, 15)

# The twelve-label window template: window labels (1-based offsets) in
# axis order, read left to right.
WINDOW_ORDER = (12, 11, 4, 3, 2, 5, 10, 9, 6, 7, 8, 1)

WINDOW_MORSE = (2, 1, 2, 1, 0, 1, 0, 1, 2, 1, 2, 1)

# Zero numbers of all window pairs, Morse numbers on the diagonal.
WINDOW_Z = (
    (2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1),
    (1, 1, 2, 1, 0, 0, 0, 0, 0, 0, 1, 1),
    (1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1),
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1),
    (1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1),
    (1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
    (1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1),
    (1, 0, 0, 0, 0, 1, 1, 1, 2, 1, 1, 1),
    (1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
)


@pytest.fixture
def perm7():
    return SturmPermutation(PERM7)


@pytest.fixture
def perm15():
    return SturmPermutation(PERM15)


@pytest.fixture
def model7(perm7):
    return build_model(perm7)


@pytest.fixture(scope="session")
def pool():
    """All Sturm permutations of size 1..7, keyed by size."""
    return {n: tuple(enumerate_sturm(n)) for n in (1, 3, 5, 7)}


@pytest.fixture(scope="session")
def pool9():
    return tuple(enumerate_sturm(9))
