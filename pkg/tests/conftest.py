from pathlib import Path

import pytest

from superbider.catalog import CATALOG, from_tokens

FIXTURES = Path(__file__).parent / "fixtures"

_ACCEPTANCE_LINES = []


def record_criterion(number: int, title: str, ok: bool, note: str = "") -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}"
    if note:
        line += f"  [{note}]"
    _ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def algebras():
    return {name: from_tokens(tokens) for name, tokens in CATALOG.items()}


@pytest.fixture(scope="session")
def sl2(algebras):
    return algebras["sl2"]


@pytest.fixture(scope="session")
def gl11(algebras):
    return algebras["gl(1|1)"]


@pytest.fixture(scope="session")
def sl21(algebras):
    return algebras["sl(2|1)"]


@pytest.fixture
def fixtures_dir():
    return FIXTURES
