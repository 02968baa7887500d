import sys
from pathlib import Path

import pytest

from ooc2d import MatrixCode

sys.path.insert(0, str(Path(__file__).parent))

# Rows 1-indexed, columns 0-indexed, as printed in the worked examples.
X_WPR = "1'0 3'0 2'1 4'1 1'4 3'4 4'4"
X_DOPR = "1'0 3'1 2'0 4'3 1'0 3'0 4'1"
Y_WPR = "1'0 2'0 4'1 2'2 3'2 1'4 4'4"
X_SHIFTS = [
    "1'0 3'0 2'1 4'1 1'4 3'4 4'4",
    "1'0 3'0 4'0 1'1 3'1 2'2 4'2",
    "1'1 3'1 4'1 1'2 3'2 2'3 4'3",
    "1'2 3'2 4'2 1'3 3'3 2'4 4'4",
    "2'0 4'0 1'3 3'3 4'3 1'4 3'4",
]
Y_SHIFTS = [
    Y_WPR,
    "1'0 4'0 1'1 2'1 4'2 2'3 3'3",
    "1'1 4'1 1'2 2'2 4'3 2'4 3'4",
    "2'0 3'0 1'2 4'2 1'3 2'3 4'4",
    "4'0 2'1 3'1 1'3 4'3 1'4 2'4",
]


def wpr(text, L=4, N=5):
    from ooc2d import parse_code

    return parse_code(text, L, N)


@pytest.fixture
def code_x():
    return MatrixCode.from_grid(
        [
            [1, 0, 0, 0, 1],
            [0, 1, 0, 0, 0],
            [1, 0, 0, 0, 1],
            [0, 1, 0, 0, 1],
        ]
    )


@pytest.fixture
def code_y():
    return MatrixCode.from_grid(
        [
            [1, 0, 0, 0, 1],
            [1, 0, 1, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 1, 0, 0, 1],
        ]
    )


_ACCEPTANCE = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, label in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {label}")
