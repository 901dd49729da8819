import pytest


def pytest_addoption(parser):
    parser.addoption("--pjp", required=True, help="path to the pjp executable")


@pytest.fixture
def pjp_bin(request):
    return request.config.getoption("--pjp")
