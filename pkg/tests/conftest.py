"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own code paths: graphs are
enumerated with itertools, triangles by a triple loop, determinants by exact
integer cofactor expansion.
"""

import itertools

import pytest

from estrada.graph import Graph

ACCEPTANCE_LINES = []


def all_labeled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for k in range(len(pairs) + 1):
        for chosen in itertools.combinations(pairs, k):
            yield Graph(n, tuple(sorted(chosen)))


def small_corpus(max_n=5):
    return [g for n in range(1, max_n + 1) for g in all_labeled_graphs(n)]


def triangles_bruteforce(g):
    es = set(g.edges)
    return sum(
        1
        for i, j, k in itertools.combinations(range(g.n), 3)
        if (i, j) in es and (i, k) in es and (j, k) in es
    )


def cofactor_det(rows):
    """Exact determinant of an integer matrix by Laplace expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for c in range(n):
        if rows[0][c] == 0:
            continue
        minor = [row[:c] + row[c + 1 :] for row in rows[1:]]
        total += (-1) ** c * rows[0][c] * cofactor_det(minor)
    return total


def adjacency_rows(g):
    rows = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        rows[i][j] = rows[j][i] = 1
    return rows


@pytest.fixture(scope="session")
def corpus5():
    return small_corpus(5)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
