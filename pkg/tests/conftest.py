import logging
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from qschur_blocks import ArithmeticParams, Dominating, Filtered, NonemptyECore, Partition, WeightPoset

GOLDEN = Path(__file__).parent / "golden"
ACCEPTANCE_LINES = []


def P(*parts):
    return Partition(parts)


@st.composite
def partitions(draw, max_size=12):
    """Random partitions built from a random multiset of positive parts."""
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        k = draw(st.integers(1, n))
        parts.append(k)
        n -= k
    return Partition(sorted(parts, reverse=True))


@pytest.fixture(autouse=True)
def _quiet_logs():
    logging.getLogger("qschur_blocks").setLevel(logging.ERROR)


def dominating_poset(p):
    spec = Filtered(Dominating(P(29, 6, 4)), NonemptyECore(3))
    return WeightPoset.from_spec(spec, ArithmeticParams(3, p))


@pytest.fixture(scope="session")
def dom2():
    return dominating_poset(2)


@pytest.fixture(scope="session")
def dom0():
    return dominating_poset(0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
