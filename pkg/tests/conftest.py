import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def sorted_close(x, y, atol):
    x, y = np.sort(np.asarray(x)), np.sort(np.asarray(y))
    assert x.shape == y.shape
    np.testing.assert_allclose(x, y, rtol=0, atol=atol)


@pytest.fixture
def m6():
    from abcspec import AbcParams

    return AbcParams(6, 2.0, 1.0, 0.0)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.LINES:
        terminalreporter.write_line(line)
