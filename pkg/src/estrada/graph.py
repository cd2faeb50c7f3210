"""Simple undirected graphs, named families and combinatorial predicates.

Vertices are ``0..n-1``; edges are stored as a sorted tuple of ``(i, j)``
pairs with ``i < j``. Matrices are built on demand.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import InvalidEdge, InvalidFamilyParam

FAMILIES = ("empty", "complete", "star", "path", "cycle", "complete_bipartite")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidEdge(f"vertex count must be >= 1, got {self.n}")
        bad = next((e for e in self.edges if not 0 <= e[0] < e[1] < self.n), None)
        if bad is not None:
            raise InvalidEdge(f"edge {bad} is not normalized for n={self.n}")
        if any(a >= b for a, b in zip(self.edges, self.edges[1:])):
            raise InvalidEdge("edges must be sorted and distinct; use from_edge_list")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def neighbors(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, dropping duplicate edges and rejecting loops."""
    if n < 1:
        raise InvalidEdge(f"vertex count must be >= 1, got {n}")
    edges = set()
    for a, b in pairs:
        a, b = int(a), int(b)
        if a == b:
            raise InvalidEdge(f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise InvalidEdge(f"edge ({a}, {b}) has an endpoint outside [0, {n})")
        edges.add((a, b) if a < b else (b, a))
    return Graph(n, tuple(sorted(edges)))


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]


def _need(cond, msg):
    if not cond:
        raise InvalidFamilyParam(msg)


def generate(spec: FamilySpec) -> Graph:
    """Canonical labeled member of a named family.

    The star centre is vertex 0, paths and cycles follow index order, and the
    blocks of ``complete_bipartite(p, q)`` are ``0..p-1`` and ``p..p+q-1``.
    """
    kind, params = spec.kind, tuple(spec.params)
    if kind == "complete_bipartite":
        _need(len(params) == 2, "complete_bipartite takes two parameters p q")
        p, q = params
        _need(p >= 1 and q >= 1, f"complete_bipartite requires p, q >= 1, got {p}, {q}")
        return Graph(p + q, tuple((i, p + j) for i in range(p) for j in range(q)))

    _need(kind in FAMILIES, f"unknown family {kind!r}")
    _need(len(params) == 1, f"{kind} takes one parameter n")
    (n,) = params
    _need(n >= 1, f"{kind} requires n >= 1, got {n}")
    if kind == "empty":
        edges = []
    elif kind == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif kind == "star":
        edges = [(0, j) for j in range(1, n)]
    elif kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    else:
        _need(n >= 3, f"cycle requires n >= 3, got {n}")
        edges = sorted([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    return Graph(n, tuple(edges))


def is_bipartite(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Return a 2-colouring ``(side0, side1)`` or ``None`` if an odd cycle exists."""
    adj = g.neighbors()
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    side0 = [v for v in range(g.n) if colour[v] == 0]
    side1 = [v for v in range(g.n) if colour[v] == 1]
    return side0, side1


def is_connected(g: Graph) -> bool:
    adj = g.neighbors()
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


def regularity(g: Graph) -> Optional[int]:
    """Common degree of a regular graph, else ``None``."""
    deg = g.degrees()
    return deg[0] if min(deg) == max(deg) else None


def triangle_count(g: Graph) -> int:
    # each triangle i<j<k is counted once, from its edge (i, j) and apex k > j
    adj = g.neighbors()
    t = 0
    for i, j in g.edges:
        t += sum(1 for k in adj[i] & adj[j] if k > j)
    return t


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for i, j in g.edges:
        a[i, j] = a[j, i] = 1.0
    return a


def signless_laplacian_matrix(g: Graph) -> np.ndarray:
    """``Q = D + A``; row ``i`` sums to twice the degree of ``i``."""
    q = adjacency_matrix(g)
    q[np.diag_indices(g.n)] = g.degrees()
    return q
