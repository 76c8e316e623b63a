from collections import Counter

import numpy as np
import pytest
from hypothesis import strategies as st

from spectrakron.partitions import Partition


@st.composite
def partitions(draw, max_k=10, min_k=1):
    """Random partition built by dropping k balls into bins."""
    k = draw(st.integers(min_value=min_k, max_value=max_k))
    bins = draw(st.lists(st.integers(0, k - 1), min_size=k, max_size=k))
    return Partition(sorted(Counter(bins).values(), reverse=True))


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
