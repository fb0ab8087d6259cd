import random
import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from dynfrt.acceptance import q5_setup

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

rngs = st.integers(min_value=0, max_value=2**32 - 1).map(random.Random)


@pytest.fixture(scope="session")
def q5():
    return q5_setup()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
