import pytest

from rigcon.crystal import spec
from rigcon.rigged import RiggedConfiguration

ACCEPTANCE_LINES = []


def record(criterion, ok, detail=""):
    line = f"[AC{criterion}] {'PASS' if ok else 'FAIL'} {detail}".rstrip()
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def rc(family, rank, length, rows):
    """Build a rigged configuration from per-color lists of (length, rigging)."""
    nu = tuple(tuple(x for x, _ in color) for color in rows)
    rig = tuple(tuple(r for _, r in color) for color in rows)
    return RiggedConfiguration(spec(family, rank, length), nu, rig)


@pytest.fixture
def example_a4():
    # A_4^(1), L = 7, lambda = Lambda_3 + Lambda_4
    return rc("A", 4, 7, [[(2, 0), (2, 0), (1, 3)], [(2, 0), (1, 0)], [(1, 0)], []])


@pytest.fixture
def example_d4():
    # D_4^(1), L = 6, lambda = 2 Lambda_3
    return rc("D", 4, 6, [[(2, 0), (2, 0), (1, 0)], [(2, 0), (2, 0)], [(1, 0)], [(2, 0)]])


# Rows of the paper's Phi tables: (rank, configuration after delta).
# The first entry is the complemented starting configuration (rank None).
A4_TABLE = [
    (None, [[(2, 0), (2, 0), (1, 0)], [(2, 0), (1, 0)], [(1, 0)], []]),
    (3, [[(2, 0), (1, 2), (1, 0)], [(1, 0), (1, 0)], [(1, 0)], []]),
    (4, [[(2, 0), (1, 0)], [(1, 0)], [], []]),
    (2, [[(1, 1), (1, 0)], [(1, 0)], [], []]),
    (3, [[(1, 0)], [], [], []]),
    (1, [[(1, 0)], [], [], []]),
    (2, [[], [], [], []]),
    (1, [[], [], [], []]),
]
A4_VACANCIES = [
    # (color, length) -> vacancy printed next to the row, per table row
    {(1, 2): 0, (1, 1): 3, (2, 2): 0, (2, 1): 0, (3, 1): 0},
    {(1, 2): 0, (1, 1): 2, (2, 1): 0, (3, 1): 0},
    {(1, 2): 0, (1, 1): 2, (2, 1): 0},
    {(1, 1): 1, (2, 1): 0},
    {(1, 1): 1},
    {(1, 1): 0},
    {},
    {},
]

D4_TABLE = [
    (None, [[(2, 0), (2, 0), (1, 2)], [(2, 0), (2, 0)], [(1, 0)], [(2, 0)]]),
    (-4, [[(2, 0), (2, 0)], [(2, 0), (1, 0)], [(1, 0)], [(1, 0)]]),
    (3, [[(2, 0), (1, 2)], [(1, 0), (1, 0)], [(1, 0)], [(1, 0)]]),
    (-1, [[(1, 1)], [], [], []]),
    (2, [[], [], [], []]),
    (1, [[], [], [], []]),
    (1, [[], [], [], []]),
]
D4_VACANCIES = [
    {(1, 2): 0, (1, 1): 2, (2, 2): 0, (3, 1): 0, (4, 2): 0},
    {(1, 2): 0, (2, 2): 0, (2, 1): 0, (3, 1): 0, (4, 1): 0},
    {(1, 2): 0, (1, 1): 2, (2, 1): 0, (3, 1): 0, (4, 1): 0},
    {(1, 1): 1},
    {},
    {},
    {},
]
