from pathlib import Path

import pytest

from bibliorank.io import parse_aggregated

DATA = Path(__file__).resolve().parent.parent / "data"
HERE = Path(__file__).resolve().parent


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def table1():
    return parse_aggregated((DATA / "table1.agg").read_text())


@pytest.fixture(scope="session")
def table1_expected_csv():
    return (HERE / "table1_expected.csv").read_text()


# acceptance verdicts, filled by tests/test_acceptance.py
ACCEPTANCE = {}


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call" and ACCEPTANCE.get(marker.args) != "FAIL":
        ACCEPTANCE[marker.args] = "PASS" if report.passed else "FAIL"
    return report


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line(f"{status}  criterion {number}: {title}")
