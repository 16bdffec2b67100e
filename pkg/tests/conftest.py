import pytest

from vcbent.generator import generate_all
from vcbent.oracle import all_bent


@pytest.fixture(scope="session")
def oracle_set():
    return all_bent()


@pytest.fixture(scope="session")
def generated_set():
    return generate_all()
