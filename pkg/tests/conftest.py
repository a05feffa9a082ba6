import sys
from fractions import Fraction

import pytest
from hypothesis import settings

from liestrata.catalog import make

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def F(*xs):
    return tuple(Fraction(x) for x in xs)


@pytest.fixture(scope="session")
def duflo():
    return make("duflo").algebra


@pytest.fixture(scope="session")
def gl3():
    return make("gl", 3).realization


@pytest.fixture(scope="session")
def sl3():
    return make("sl", 3).realization


@pytest.fixture(scope="session")
def h3():
    return make("heisenberg", 3).algebra


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
