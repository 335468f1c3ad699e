import pytest

from arikikoike.algebra import shared_spec
from arikikoike.cli import deterministic_point
from arikikoike.ratfunc import ParamSpec


@pytest.fixture(scope="session")
def ps1():
    return ParamSpec(1)


@pytest.fixture(scope="session")
def ps2():
    return ParamSpec(2)


@pytest.fixture(scope="session")
def ps3():
    return ParamSpec(3)


@pytest.fixture(scope="session")
def spec22():
    return shared_spec(2, 2, "symbolic", None)


@pytest.fixture(scope="session")
def spec32():
    return shared_spec(3, 2, "symbolic", None)


@pytest.fixture(scope="session")
def spec12():
    return shared_spec(1, 2, "symbolic", None)


@pytest.fixture(scope="session")
def spec13():
    return shared_spec(1, 3, "symbolic", None)


@pytest.fixture(scope="session")
def point23():
    return deterministic_point(2, 3, 7)


@pytest.fixture(scope="session")
def spec23_eval(point23):
    return shared_spec(2, 3, "eval", point23)
