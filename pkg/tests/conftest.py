import hypothesis.strategies as st
import pytest

from sconj.oracle import partitions_of

partitions = st.lists(st.integers(1, 14), max_size=9).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)
moduli = st.integers(1, 6)


def all_partitions(max_n, min_n=0):
    for n in range(min_n, max_n + 1):
        yield from partitions_of(n)


@pytest.fixture(scope="session")
def fig7():
    return (19, 16, 14, 12, 7, 5, 4, 3)


@pytest.fixture(scope="session")
def fig5():
    return (17, 16, 14, 12, 8, 7)
