import random

import pytest

from nimors.engine import MemoTable
from nimors.graph import Graph


def mask_graph(n: int, mask: int) -> Graph:
    """Graph from an upper-triangle bitmask, pair order (0,1),(0,2),(1,2),..."""
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph.from_rows(tuple(rows))


def all_graphs(n: int):
    for mask in range(1 << (n * (n - 1) // 2)):
        yield mask_graph(n, mask)


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@pytest.fixture(scope="session")
def memo():
    """One shared solver cache for the whole run; values are deterministic
    so sharing can never change a result."""
    return MemoTable(slots_log2=22)


@pytest.fixture(scope="session")
def brute_memo():
    return {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance" in rep.nodeid and rep.when == "call":
                rows.append((rep.nodeid.split("::")[-1], outcome))
    if rows:
        terminalreporter.write_sep("=", "acceptance criteria")
        for name, outcome in sorted(rows):
            mark = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"{mark}  {name}")
