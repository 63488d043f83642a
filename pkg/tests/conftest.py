import random
import re

import pytest

from chromapoly.core import (
    Hypergraph,
    complete_graph,
    complete_hypergraph,
    path_graph,
    random_graph,
    random_hypergraph,
)

# criterion label -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: (int(re.match(r"\d+", s).group()), s)):
        ok, detail = ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")


def graphs(count, max_n, p=0.5, seed=0):
    rng = random.Random(seed)
    return [random_graph(rng.randint(1, max_n), p, rng) for _ in range(count)]


def hypergraphs(count, max_n, max_edges=8, seed=0):
    rng = random.Random(seed)
    return [random_hypergraph(rng.randint(1, max_n), max_edges, rng) for _ in range(count)]


@pytest.fixture
def triangle():
    return complete_graph(3)  # edges 01, 02, 12 in that order


@pytest.fixture
def k33():
    return complete_hypergraph(3, 3)


@pytest.fixture
def k43():
    return complete_hypergraph(4, 3)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def small_graphs():
    return graphs(40, 6, seed=11)


@pytest.fixture
def small_hypergraphs():
    return hypergraphs(40, 6, seed=12)


@pytest.fixture
def edgeless():
    return lambda n: Hypergraph(n, ())


def brute_partitions(elems, j):
    """Set partitions into j blocks by labelling each element (oracle for the RGS enumerator)."""
    from itertools import product

    seen = set()
    for labels in product(range(j), repeat=len(elems)):
        if len(set(labels)) != j:
            continue
        blocks = [0] * j
        for x, lab in zip(elems, labels):
            blocks[lab] |= 1 << x
        seen.add(frozenset(blocks))
    return seen
