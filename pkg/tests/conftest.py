import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quivercurves.field import FieldSpec  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def F2():
    return FieldSpec.prime(2)


@pytest.fixture
def F3():
    return FieldSpec.prime(3)


@pytest.fixture
def F5():
    return FieldSpec.prime(5)


@pytest.fixture
def F7():
    return FieldSpec.prime(7)


@pytest.fixture
def QQ():
    return FieldSpec.rational()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
