import warnings

import pytest
from scipy.integrate import IntegrationWarning

ACCEPTANCE_LINES = []


@pytest.fixture(autouse=True)
def _quiet_quadrature():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        yield


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
