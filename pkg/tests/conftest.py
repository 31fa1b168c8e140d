import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


def rel(a, b):
    """Relative error with an absolute floor near zero."""
    return abs(a - b) / max(abs(b), 1e-300) if abs(b) > 1e-12 else abs(a - b)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
