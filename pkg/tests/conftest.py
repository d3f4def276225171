import os

import pytest

from oracles import smallest_prime_factors

ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("TAXICAB_FULL"):
        return
    skip = pytest.mark.skip(reason="set TAXICAB_FULL=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and report.when == "call":
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        ACCEPTANCE_RESULTS.append((doc, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for doc, status in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(f"{status}  {doc}")


@pytest.fixture(scope="session")
def spf_million():
    return smallest_prime_factors(10**6)
