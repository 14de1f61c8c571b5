"""Canonical labeling and isomorphism-class enumeration for small graphs.

The canonical form is the relabeling whose upper-triangle bit string (graph6
column order) is lexicographically smallest among the leaves of an
individualization-refinement tree. Vertices start coloured by degree; colour
classes are refined until equitable, and branching only individualizes one
vertex per twin class inside the target cell (swapping twins is an
automorphism fixing the current partition, so the pruned subtrees are copies).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np

from .graph import Graph, is_connected
from .graph6 import graph6_encode

BUILTIN_ENUMERATION_LIMIT = 7


def _refine(G: Graph, colors: list[int]) -> list[int]:
    """Equitable refinement. Colours are ranks 0..k-1 and stay label-invariant."""
    n = G.n
    ncol = len(set(colors))
    while True:
        keys = []
        for v in range(n):
            counts = [0] * ncol
            r = G.rows[v]
            while r:
                low = r & -r
                counts[colors[low.bit_length() - 1]] += 1
                r ^= low
            keys.append((colors[v], tuple(counts)))
        ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [ranks[k] for k in keys]
        if len(ranks) == ncol:
            return new
        colors, ncol = new, len(ranks)


def _individualize(colors: list[int], v: int) -> list[int]:
    keys = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [ranks[k] for k in keys]


def _are_twins(G: Graph, u: int, v: int) -> bool:
    return G.rows[u] & ~(1 << v) == G.rows[v] & ~(1 << u)


def canonical_labeling(G: Graph) -> list[int]:
    """Permutation ``perm`` with ``G.relabel(perm)`` canonical for the isomorphism class."""
    n = G.n
    if n == 1:
        return [0]
    A = G.adjacency(dtype=np.uint8)
    iu, ju = np.triu_indices(n, 1)
    order = np.lexsort((iu, ju))  # column-major: (0,1), (0,2), (1,2), (0,3), ...
    iu, ju = iu[order], ju[order]

    best_code: bytes | None = None
    best_perm: list[int] = []

    def visit(colors: list[int]) -> None:
        nonlocal best_code, best_perm
        colors = _refine(G, colors)
        if len(set(colors)) == n:
            perm = [0] * n
            for v, c in enumerate(colors):
                perm[c] = v
            p = np.asarray(perm)
            code = A[p[iu], p[ju]].tobytes()
            if best_code is None or code < best_code:
                best_code, best_perm = code, perm
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        # first smallest non-singleton cell
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        reps: list[int] = []
        for v in range(n):
            if colors[v] == target and not any(_are_twins(G, v, r) for r in reps):
                reps.append(v)
        for v in reps:
            visit(_individualize(colors, v))

    degs = sorted(set(G.degrees))
    visit([degs.index(d) for d in G.degrees])
    return best_perm


def canonical_form(G: Graph) -> Graph:
    return G.relabel(canonical_labeling(G))


def canonical_key(G: Graph) -> str:
    """graph6 line of the canonical form; equal keys iff isomorphic."""
    return graph6_encode(canonical_form(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.num_edges != H.num_edges or sorted(G.degrees) != sorted(H.degrees):
        return False
    return canonical_key(G) == canonical_key(H)


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[str, Graph] = {}
    for H in _all_classes(n - 1):
        for mask in range(1 << (n - 1)):
            rows = list(H.rows)
            for u in range(n - 1):
                if (mask >> u) & 1:
                    rows[u] |= 1 << (n - 1)
            rows.append(mask)
            C = canonical_form(Graph(n, tuple(rows)))
            key = graph6_encode(C)
            if key not in seen:
                seen[key] = C
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(n: int, connected: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of ``n``-vertex graphs.

    Built by vertex augmentation of the (n-1)-vertex classes; limited to
    ``n <= 7``. Larger orders should come from a graph6 catalog.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > BUILTIN_ENUMERATION_LIMIT:
        raise ValueError(
            f"built-in enumeration stops at n={BUILTIN_ENUMERATION_LIMIT}; supply a graph6 catalog"
        )
    for G in _all_classes(n):
        if not connected or is_connected(G):
            yield G


def enumerate_connected(n: int) -> Iterator[Graph]:
    return enumerate_graphs(n, connected=True)
