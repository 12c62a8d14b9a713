import pytest

from polyconcept import fixture


@pytest.fixture(scope="session")
def fig1():
    return fixture("fig1")


@pytest.fixture(scope="session")
def fig3l():
    return fixture("fig3l")


@pytest.fixture(scope="session")
def fig3r():
    return fixture("fig3r")


@pytest.fixture(scope="session")
def fig5l():
    return fixture("fig5l")


@pytest.fixture(scope="session")
def fig5r():
    return fixture("fig5r")


@pytest.fixture(scope="session")
def crook():
    return fixture("crook")
