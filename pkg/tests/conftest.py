import re
from collections import defaultdict

import pytest

from selgame import load_bundled

ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def bundled():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_bundled(name)
        return cache[name]

    return get


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.name.startswith("test_criterion_") and (report.when == "call" or report.failed):
        ACCEPTANCE_RESULTS.append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    # sub-laws such as criterion_10a and criterion_10b roll up into one line
    grouped = defaultdict(list)
    for name, outcome in ACCEPTANCE_RESULTS:
        number = int(re.match(r"test_criterion_(\d+)", name).group(1))
        grouped[number].append((name, outcome))
    terminalreporter.section("acceptance criteria")
    for number in sorted(grouped):
        checks = sorted(grouped[number])
        failed = [n.removeprefix("test_") for n, o in checks if o != "passed"]
        verdict = "FAIL" if failed else "PASS"
        label = checks[0][0].removeprefix("test_") if len(checks) == 1 else f"criterion_{number:02d}"
        detail = f" ({len(checks)} checks)" if len(checks) > 1 else ""
        if failed:
            detail += " failed: " + ", ".join(failed)
        terminalreporter.write_line(f"{verdict}  {label}{detail}")
