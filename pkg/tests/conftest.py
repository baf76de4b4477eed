import pytest
from hypothesis import HealthCheck, settings

from nullcolor.algebra import FieldSpec, field_make

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def f5():
    return field_make(FieldSpec(5))


@pytest.fixture
def f7():
    return field_make(FieldSpec(7))


@pytest.fixture
def qq():
    return field_make(FieldSpec(0))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
