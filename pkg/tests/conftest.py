import pytest
from hypothesis import HealthCheck, settings

from pbent import fixtures as fx
from pbent.galois import find_primitive_modulus, make_field

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# acceptance tests append (criterion, passed, detail) here; printed at the end
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def f9():
    return make_field(3, [2, 2, 1])


@pytest.fixture(scope="session")
def f27():
    return make_field(3, find_primitive_modulus(3, 3))


@pytest.fixture(scope="session")
def f81():
    return fx.field_3_4()


@pytest.fixture(scope="session")
def f729():
    return fx.field_3_6()


@pytest.fixture(scope="session")
def f25():
    return make_field(5, find_primitive_modulus(5, 2))


@pytest.fixture(scope="session")
def f125():
    return fx.field_5_3()


@pytest.fixture(scope="session")
def f49():
    return make_field(7, find_primitive_modulus(7, 2))


@pytest.fixture(scope="session")
def f2401():
    return fx.field_7_4()
