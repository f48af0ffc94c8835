import sys
import functools

import pytest

from fuzzy_sta.harness import HarnessConfig, run_scenario


@pytest.fixture(scope="session")
def harness_cfg():
    return HarnessConfig.load()


@functools.lru_cache(maxsize=None)
def cached_run(scenario, controller):
    """Default-config closed-loop run, shared across test modules."""
    return run_scenario(HarnessConfig.load().scenario(scenario, controller))


@pytest.fixture(scope="session")
def run():
    return cached_run


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    verdicts = getattr(acceptance, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        terminalreporter.write_line(verdicts[number])
