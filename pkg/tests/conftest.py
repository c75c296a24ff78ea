import random

import pytest

from crossconn import ReesSemigroup, SandwichMatrix, builtin


@pytest.fixture(scope="session")
def z2():
    return builtin("cyclic", 2)


@pytest.fixture(scope="session")
def z3():
    return builtin("cyclic", 3)


@pytest.fixture(scope="session")
def s3():
    return builtin("symmetric", 3)


@pytest.fixture(scope="session")
def klein():
    return builtin("klein")


@pytest.fixture(scope="session")
def p1(z2):
    # rows by lam: (0,0) and (0,1)
    return SandwichMatrix(z2, [[0, 0], [0, 1]])


@pytest.fixture(scope="session")
def s1(p1):
    return ReesSemigroup(p1)


@pytest.fixture
def make_random_matrix():
    def build(group, n_lambda, n_i, rng: random.Random):
        entries = [
            [rng.randrange(group.order) for _ in range(n_i)] for _ in range(n_lambda)
        ]
        return SandwichMatrix(group, entries)

    return build
