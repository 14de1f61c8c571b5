"""Simple undirected graphs stored as per-vertex bitsets, plus the graph families used here."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Row ``u`` is an integer whose bit ``v`` is set iff ``uv`` is an edge.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one bitset row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits beyond vertex {self.n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")
                r ^= low

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if (self.rows[v] >> u) & 1]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if (self.rows[u] >> v) & 1]

    @cached_property
    def edge_array(self) -> np.ndarray:
        e = self.edges()
        return np.array(e, dtype=np.intp).reshape(len(e), 2)

    def edges_within(self, X: Iterable[int]) -> list[tuple[int, int]]:
        """E(X): edges with both ends in X."""
        xs = set(X)
        return [(u, v) for u, v in self.edges() if u in xs and v in xs]

    def edges_between(self, X: Iterable[int], Y: Iterable[int]) -> list[tuple[int, int]]:
        """E(X, Y): edges with one end in X and the other in Y."""
        xs, ys = set(X), set(Y)
        return [(u, v) for u, v in self.edges() if (u in xs and v in ys) or (u in ys and v in xs)]

    def adjacency(self, dtype=float) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        e = self.edge_array
        if len(e):
            a[e[:, 0], e[:, 1]] = 1
            a[e[:, 1], e[:, 0]] = 1
        return a

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph where new vertex ``i`` is old vertex ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        inv = [0] * self.n
        for i, p in enumerate(perm):
            inv[p] = i
        rows = []
        for i in range(self.n):
            row = self.rows[perm[i]]
            out = 0
            while row:
                low = row & -row
                out |= 1 << inv[low.bit_length() - 1]
                row ^= low
            rows.append(out)
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_adjacency(a: np.ndarray) -> Graph:
    a = np.asarray(a)
    n = a.shape[0]
    iu, ju = np.nonzero(np.triu(a, 1))
    return make_graph(n, zip(iu.tolist(), ju.tolist()))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << u) for u in range(n)))


def path(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n-1} centred at vertex 0."""
    return make_graph(n, [(0, i) for i in range(1, n)])


def kite(n: int) -> Graph:
    """Clique on ``0..n-2`` with pendant vertex ``n-1`` hanging off vertex 0."""
    if n < 3:
        raise ValueError("kite needs n >= 3")
    edges = [(u, v) for u in range(n - 1) for v in range(u + 1, n - 1)]
    edges.append((0, n - 1))
    return make_graph(n, edges)


def _join(n: int) -> Graph:
    k = (2 * n) // 3
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if u < k]
    return make_graph(n, edges)


def join_clique_independent(n: int) -> Graph:
    """K_{floor(2n/3)} joined to an independent set of ceil(n/3) vertices.

    The clique occupies the first ``floor(2n/3)`` labels.
    """
    if n < 3:
        raise ValueError("join_clique_independent needs n >= 3")
    return _join(n)


def is_connected(G: Graph) -> bool:
    seen = 1
    queue = deque([0])
    while queue:
        u = queue.popleft()
        new = G.rows[u] & ~seen
        seen |= new
        while new:
            low = new & -new
            queue.append(low.bit_length() - 1)
            new ^= low
    return seen == (1 << G.n) - 1


def toggle_edge(G: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise ValueError("cannot toggle a self-loop")
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise ValueError(f"pair ({u}, {v}) out of range for n={G.n}")
    rows = list(G.rows)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return Graph(G.n, tuple(rows))
