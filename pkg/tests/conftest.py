import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helike import bundled_reference  # noqa: E402


@pytest.fixture(scope="session")
def refs():
    return bundled_reference()


_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    label = request.node.function.__doc__.strip().splitlines()[0]
    yield label
    failed = getattr(request.node, "_failed", False)
    _ACCEPTANCE.append(f"{'FAIL' if failed else 'PASS'}  {label}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and rep.failed:
        item._failed = True


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
