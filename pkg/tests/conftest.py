import pytest

from ehull.code import from_generator_matrix
from ehull.textio import parse_matrix


def mat(text):
    """Matrix from rows separated by ';', e.g. ``mat("k 0; 0 k")``."""
    return parse_matrix(text.replace(";", "\n"))


def code(text):
    return from_generator_matrix(mat(text))


def bits(text):
    return tuple(int(ch) for ch in text)


# [6,2] code of hull-rank 2 and [8,3] code of hull-rank 3 used for the build-up runs
M_SMALL = "k 0 0 0 0 k; 0 k 0 0 0 k"
M_LARGE = "k 0 0 k 0 k k 0; 0 k 0 k k k 0 0; 0 0 k k 0 k 0 k"


@pytest.fixture
def small():
    return code(M_SMALL)


@pytest.fixture
def large():
    return code(M_LARGE)
