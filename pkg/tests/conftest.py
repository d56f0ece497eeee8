import pytest

from cubicprimes import sieve_range


@pytest.fixture(scope="session")
def tables_small():
    return sieve_range(10**4)


@pytest.fixture(scope="session")
def tables_million():
    return sieve_range(10**6)
