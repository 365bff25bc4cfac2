"""Shared systems and KL tables; each is built once per test session."""

import pytest

from src.coxeter.system import build_system
from src.kazhdan_lusztig.cells import cell_decomposition
from src.kazhdan_lusztig.klpoly import KLTable


@pytest.fixture(scope="session")
def a1():
    return build_system("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_system("A", 2)


@pytest.fixture(scope="session")
def a3():
    return build_system("A", 3)


@pytest.fixture(scope="session")
def a4():
    return build_system("A", 4)


@pytest.fixture(scope="session")
def b2():
    return build_system("B", 2)


@pytest.fixture(scope="session")
def b3():
    return build_system("B", 3)


@pytest.fixture(scope="session")
def kl_a2(a2):
    return KLTable.build(a2)


@pytest.fixture(scope="session")
def kl_a3(a3):
    return KLTable.build(a3)


@pytest.fixture(scope="session")
def kl_a4(a4):
    return KLTable.build(a4)


@pytest.fixture(scope="session")
def kl_b2(b2):
    return KLTable.build(b2)


@pytest.fixture(scope="session")
def kl_b3(b3):
    return KLTable.build(b3)


@pytest.fixture(scope="session")
def cells_a2(kl_a2):
    return cell_decomposition(kl_a2, "twosided")


@pytest.fixture(scope="session")
def cells_a3(kl_a3):
    return cell_decomposition(kl_a3, "twosided")
