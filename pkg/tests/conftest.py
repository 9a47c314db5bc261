from __future__ import annotations

import pytest

from cyclicideals.quiver import build_from_word

ACCEPTANCE_LINES: list[str] = []

# Decomposition case: vertices 1, 2, 3, 6, 5, 4 in cycle order; arrows 1->2, 2->3, 6->3, 6->5, 5->4, 1->4
DECOMP_WORD = "++-++-"
DECOMP_LABELS = [1, 2, 3, 6, 5, 4]
# Split-product case: vertices 1..6 in cycle order; arrows 1->2, 3->2, 3->4, 5->4, 5->6, 1->6
SPLIT_WORD = "+-+-+-"

STAIR_SIGNATURE = (2, 4, 4, 3)
STAIR_ASCII = (
    "◦◦        \n"
    " ◦        \n"
    " ◦◦       \n"
    " ••◦      \n"
    " *•••••*  \n"
    "     ◦•*  \n"
    "      ••  \n"
    "       •  \n"
    "       •• \n"
    "       *•◦\n"
)


def decomp_vertex(q, label: int) -> int:
    return q.vertex_from_input(DECOMP_LABELS.index(label))


def split_vertex(q, label: int) -> int:
    return q.vertex_from_input(label - 1)


@pytest.fixture(scope="session")
def split_pair():
    from cyclicideals.ideal import close_generators

    q = build_from_word(SPLIT_WORD)
    I = close_generators(q, [q.trivial(split_vertex(q, v)) for v in (1, 2, 5, 6)])
    J = close_generators(q, [q.trivial(split_vertex(q, v)) for v in (2, 3, 4, 5)])
    return q, I, J


@pytest.fixture(scope="session")
def full_report():
    """Every invariant over every admissible quiver with at most 8 vertices (a few minutes)."""
    from cyclicideals.verify import run_verify

    return run_verify(8, seed=0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
