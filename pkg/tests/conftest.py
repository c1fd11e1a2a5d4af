import itertools

import pytest

from grm.ffield import make_field
from grm.mpoly import evaluate


def grid(q, n):
    return itertools.product(range(q), repeat=n)


def brute_zeros(f):
    """Zero count by scalar evaluation at every point (independent of the vectorised path)."""
    return sum(1 for x in grid(f.field.q, f.n) if evaluate(f, x) == 0)


@pytest.fixture
def gf3():
    return make_field(3)


@pytest.fixture
def gf4():
    return make_field(4)


@pytest.fixture
def gf5():
    return make_field(5)
