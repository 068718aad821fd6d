import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from splength.fixtures import corpus  # noqa: E402


@pytest.fixture(scope="session")
def fixture_corpus():
    return corpus()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
