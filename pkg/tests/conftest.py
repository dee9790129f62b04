import pytest

from modgal.families import catalog


@pytest.fixture(scope="session")
def fixture_catalog():
    return catalog()
