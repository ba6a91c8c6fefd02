import pytest

from toricglsm import catalog


@pytest.fixture
def p1():
    return catalog.by_name("P1")


@pytest.fixture
def p2():
    return catalog.by_name("P2")


@pytest.fixture
def p1xp1():
    return catalog.by_name("P1xP1")


@pytest.fixture
def f1():
    return catalog.by_name("F1")


@pytest.fixture
def golden_fans():
    return [catalog.by_name(name) for name in catalog.GOLDEN_NAMES]
