import pytest
from hypothesis import settings

from hermcoh.chern import grassmannian_presentation
from hermcoh.pipeline import Section3
from hermcoh.polyring import GF2, ZZ

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def gr35():
    return grassmannian_presentation(3, 5, GF2)


@pytest.fixture(scope="session")
def gr35_zz():
    return grassmannian_presentation(3, 5, ZZ)


@pytest.fixture(scope="session")
def section3():
    return Section3()


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion; printed in the terminal summary."""
    def record(number: int, ok: bool, detail: str):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
