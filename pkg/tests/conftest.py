import json
from pathlib import Path

import pytest

TESTS = Path(__file__).parent
DATA = TESTS.parent / "src" / "arakelov" / "data"

_criteria: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def oracle():
    """PARI-derived field data, keyed by (conductor, H generators)."""
    raw = json.loads((TESTS / "data" / "pari_oracle.json").read_text())
    return {(f["conductor"], tuple(f["H_generators"])): f for f in raw["fields"]}


@pytest.fixture(scope="session")
def class_data_path():
    return DATA / "class_data.json"


@pytest.fixture(scope="session")
def corpus_dir():
    return DATA / "corpus"


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    num = int(name.split("_")[2])
    _criteria[num] = (name, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        name, status = _criteria[num]
        terminalreporter.write_line(f"criterion {num}: {status}  ({name})")
