import pytest

from locint.lattice import chain_lattice, powerset_lattice


@pytest.fixture(scope="session")
def b4():
    return powerset_lattice(["x", "y"])


@pytest.fixture(scope="session")
def b8():
    return powerset_lattice(["x", "y", "z"])


@pytest.fixture(scope="session")
def c3():
    return chain_lattice(["0", "m", "1"])
