import pytest

from frobcoh.acceptance import algebra


@pytest.fixture(scope="session")
def alg():
    """alg(spec, field=None) -> validated builtin, cached across tests."""
    return algebra


def pytest_addoption(parser):
    parser.addoption("--deep", action="store_true",
                     help="also run the d=4 and d=6 chain identities in the acceptance suite")


@pytest.fixture(scope="session")
def deep(request):
    return request.config.getoption("--deep")
