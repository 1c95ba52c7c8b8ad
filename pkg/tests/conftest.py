import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from agrivest.catalog import load_seed_catalog

FIXTURES = Path(__file__).parent / "fixtures"

_acceptance_outcomes: dict[str, str] = {}


@pytest.fixture(scope="session")
def catalog():
    return load_seed_catalog()


@pytest.fixture()
def store_root(tmp_path):
    return tmp_path / "store"


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _acceptance_outcomes[name] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and report.failed:
        _acceptance_outcomes[name] = "ERROR"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance_outcomes):
        label = name.replace("test_", "", 1).replace("_", " ")
        terminalreporter.write_line(f"{label}: {_acceptance_outcomes[name]}")
