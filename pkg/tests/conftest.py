import random
from fractions import Fraction

import pytest

from instantons.monad import sample_instanton


def fraction_rank(rows):
    """Plain Gaussian elimination over Q, used as an independent oracle."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


_SAMPLES = {}


def cached_sample(r, n, seed=0):
    key = (r, n, seed)
    if key not in _SAMPLES:
        _SAMPLES[key] = sample_instanton(r, n, seed)
    return _SAMPLES[key]


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def m21():
    return cached_sample(2, 1)


@pytest.fixture(scope="session")
def m22():
    return cached_sample(2, 2)


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
