"""Extremal-graph search for the generalized spread objective.

Exhaustive verification over isomorphism classes, an edge-toggle hill climb
steered by the first-order toggle gain, and the eigenvector partitions
S, T, L, B, C of a candidate maximizer.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .enumeration import canonical_key, enumerate_connected, enumerate_graphs, is_isomorphic
from .graph import Graph, _join, from_adjacency, is_connected, kite, toggle_edge
from .spectra import (
    ObjectiveParams,
    a_alpha_from_adjacency,
    eig_sym,
    objective_from_adjacency,
    spread,
)

UNIQUENESS_GAP = 1e-9
DEGENERACY_GAP = 1e-8
IMPROVEMENT_EPS = 1e-10


@dataclass(frozen=True)
class ToggleContext:
    """Extreme eigenpairs of G used to score edge toggles.

    ``x`` is the nonnegative unit vector for lambda_max(A_alpha), ``z`` a unit
    vector for lambda_min(A_gamma). ``degenerate`` marks a repeated extreme
    eigenvalue, where gains depend on which eigenvector the solver returned.
    """

    x: np.ndarray
    z: np.ndarray
    params: ObjectiveParams
    lambda_max: float
    lambda_min: float
    degenerate: bool = False

    @property
    def value(self) -> float:
        return self.lambda_max - self.params.beta * self.lambda_min


def _context_from_adjacency(adj: np.ndarray, params: ObjectiveParams) -> ToggleContext:
    top = eig_sym(a_alpha_from_adjacency(adj, params.alpha))
    bottom = top if params.gamma == params.alpha else eig_sym(a_alpha_from_adjacency(adj, params.gamma))
    x = np.maximum(top.eigenvectors[:, -1], 0.0)
    x /= np.linalg.norm(x)
    z = bottom.eigenvectors[:, 0]
    degenerate = top.top_gap() < DEGENERACY_GAP or bottom.bottom_gap() < DEGENERACY_GAP
    return ToggleContext(x, z, params, top.lambda_max, bottom.lambda_min, degenerate)


def toggle_context(G: Graph, params: ObjectiveParams) -> ToggleContext:
    if not is_connected(G):
        raise ValueError("toggle context needs a connected graph")
    return _context_from_adjacency(G.adjacency(), params)


def toggle_gain(ctx: ToggleContext, u: int, v: int) -> float:
    """alpha(x_u - x_v)^2 - beta*gamma(z_u - z_v)^2 + 2(x_u x_v - beta z_u z_v).

    Adding a non-edge uv raises the objective by at least this much; deleting
    an edge lowers it by at most this much.
    """
    if u == v:
        raise ValueError("toggle gain needs two distinct vertices")
    a, b, g = ctx.params.alpha, ctx.params.beta, ctx.params.gamma
    x, z = ctx.x, ctx.z
    return float(
        a * (x[u] - x[v]) ** 2 - b * g * (z[u] - z[v]) ** 2 + 2.0 * (x[u] * x[v] - b * z[u] * z[v])
    )


def _gain_matrix(ctx: ToggleContext) -> np.ndarray:
    a, b, g = ctx.params.alpha, ctx.params.beta, ctx.params.gamma
    x, z = ctx.x, ctx.z
    dx = x[:, None] - x[None, :]
    dz = z[:, None] - z[None, :]
    return a * dx**2 - b * g * dz**2 + 2.0 * (np.outer(x, x) - b * np.outer(z, z))


# -- exhaustive verification -------------------------------------------------


@dataclass(frozen=True)
class VerifyReport:
    n: int
    params: ObjectiveParams | None
    maximizer: str
    max_value: float
    runner_up_value: float
    gap: float
    class_count: int
    target: str
    target_is_unique_max: bool

    @property
    def kite_is_unique_max(self) -> bool:
        return self.target == "kite" and self.target_is_unique_max

    @property
    def tie(self) -> bool:
        """Top two values within the uniqueness threshold: inconclusive, not a counterexample."""
        return self.gap <= UNIQUENESS_GAP

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "maximizer": self.maximizer,
            "max_value": self.max_value,
            "runner_up_value": self.runner_up_value,
            "gap": self.gap,
            "class_count": self.class_count,
            "target": self.target,
            f"{self.target}_is_unique_max": self.target_is_unique_max,
            "tie": self.tie,
        }
        if self.params is not None:
            d.update(alpha=self.params.alpha, beta=self.params.beta, gamma=self.params.gamma)
        return d


def _objective_chunk(args) -> list[float]:
    rows_list, n, params = args
    return [objective_from_adjacency(Graph(n, rows).adjacency(), params) for rows in rows_list]


def _spread_chunk(args) -> list[float]:
    rows_list, n, _ = args
    return [spread(Graph(n, rows), 0.0) for rows in rows_list]


def _evaluate(graphs: Sequence[Graph], n: int, params, fn, workers: int) -> list[float]:
    if workers <= 1 or len(graphs) < 2 * workers:
        return fn(([G.rows for G in graphs], n, params))
    size = math.ceil(len(graphs) / workers)
    chunks = [([G.rows for G in graphs[i:i + size]], n, params) for i in range(0, len(graphs), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [v for part in pool.map(fn, chunks) for v in part]


def _top_two(graphs: Sequence[Graph], values: Sequence[float]) -> tuple[Graph, float, float]:
    # ties at the top go to the smaller canonical key so the report is order-independent
    best_i = None
    for i, v in enumerate(values):
        if best_i is None or v > values[best_i]:
            best_i = i
    top = values[best_i]
    tied = [i for i, v in enumerate(values) if v == top]
    if len(tied) > 1:
        best_i = min(tied, key=lambda i: canonical_key(graphs[i]))
    rest = [v for i, v in enumerate(values) if i != best_i]
    return graphs[best_i], top, max(rest) if rest else -math.inf


def _collect(n: int, source: Iterable[Graph] | None, default, require_connected: bool) -> list[Graph]:
    graphs = list(default(n) if source is None else source)
    if not graphs:
        raise ValueError("empty graph source")
    for i, G in enumerate(graphs):
        if G.n != n:
            raise ValueError(f"source graph {i} has {G.n} vertices, expected {n}")
        if require_connected and not is_connected(G):
            raise ValueError(f"source graph {i} is disconnected")
    return graphs


def exhaustive_verify(
    n: int,
    params: ObjectiveParams,
    source: Iterable[Graph] | None = None,
    workers: int = 1,
) -> VerifyReport:
    """Maximize the objective over one graph per isomorphism class.

    ``source`` defaults to the built-in enumeration of connected graphs
    (n <= 7); pass a graph6 catalog for larger n.
    """
    if n < 3:
        raise ValueError("verification needs n >= 3")
    graphs = _collect(n, source, enumerate_connected, require_connected=True)
    values = _evaluate(graphs, n, params, _objective_chunk, workers)
    best, top, runner = _top_two(graphs, values)
    gap = top - runner
    unique = gap > UNIQUENESS_GAP and is_isomorphic(best, kite(n))
    return VerifyReport(n, params, canonical_key(best), top, runner, gap, len(graphs), "kite", unique)


def adjacency_spread_crosscheck(n: int, source: Iterable[Graph] | None = None, workers: int = 1) -> VerifyReport:
    """Maximize the adjacency spread over all n-vertex graphs, connected or not.

    The target is K_{floor(2n/3)} joined with ceil(n/3) independent vertices.
    """
    if n < 2:
        raise ValueError("crosscheck needs n >= 2")
    graphs = _collect(n, source, enumerate_graphs, require_connected=False)
    values = _evaluate(graphs, n, None, _spread_chunk, workers)
    best, top, runner = _top_two(graphs, values)
    gap = top - runner
    unique = gap > UNIQUENESS_GAP and is_isomorphic(best, _join(n))
    return VerifyReport(n, None, canonical_key(best), top, runner, gap, len(graphs), "join", unique)


# -- hill climb ----------------------------------------------------------------


@dataclass(frozen=True)
class Move:
    step: int
    u: int
    v: int
    kind: str  # "add" or "delete"
    gain: float
    delta: float
    degenerate: bool


@dataclass(frozen=True)
class ClimbOutcome:
    start: Graph
    graph: Graph
    value: float
    trajectory: list[tuple[int, float]]
    moves: list[Move] = field(default_factory=list)


@dataclass(frozen=True)
class HillClimbResult:
    best: Graph
    value: float
    trajectory: list[tuple[int, float]]
    outcomes: list[ClimbOutcome]


def local_search(G: Graph, params: ObjectiveParams, max_steps: int | None = None) -> ClimbOutcome:
    """Best-improvement edge toggling from ``G`` until no admissible move helps.

    With simple extreme eigenvalues a move is admissible when it adds a
    non-edge of positive gain or deletes an edge of negative gain whose
    removal keeps the graph connected. With a repeated extreme eigenvalue
    every connectivity-preserving toggle is a candidate. Among candidates the
    largest exact objective increase wins (lexicographically smallest pair on
    ties) and must exceed ``IMPROVEMENT_EPS``.
    """
    if not is_connected(G):
        raise ValueError("local search needs a connected start")
    n = G.n
    adj = G.adjacency()
    graph = G
    ctx = _context_from_adjacency(adj, params)
    value = ctx.value
    trajectory = [(0, value)]
    moves: list[Move] = []
    step = 0
    while max_steps is None or step < max_steps:
        gains = _gain_matrix(ctx)
        best: tuple[float, int, int] | None = None
        for u in range(n - 1):
            for v in range(u + 1, n):
                present = adj[u, v] != 0
                if not ctx.degenerate and (gains[u, v] >= 0 if present else gains[u, v] <= 0):
                    continue
                if present and not is_connected(toggle_edge(graph, u, v)):
                    continue
                adj[u, v] = adj[v, u] = 0.0 if present else 1.0
                delta = objective_from_adjacency(adj, params) - value
                adj[u, v] = adj[v, u] = 1.0 if present else 0.0
                if best is None or delta > best[0]:
                    best = (delta, u, v)
        if best is None or best[0] <= IMPROVEMENT_EPS:
            break
        _, u, v = best
        kind = "delete" if adj[u, v] else "add"
        adj[u, v] = adj[v, u] = 0.0 if kind == "delete" else 1.0
        graph = toggle_edge(graph, u, v)
        new_ctx = _context_from_adjacency(adj, params)
        step += 1
        moves.append(Move(step, u, v, kind, float(gains[u, v]), new_ctx.value - value, ctx.degenerate))
        ctx, value = new_ctx, new_ctx.value
        trajectory.append((step, value))
    return ClimbOutcome(G, graph, value, trajectory, moves)


def random_connected_graph(n: int, rng: np.random.Generator, p: float = 0.5) -> Graph:
    """Erdos-Renyi G(n, p), resampled until connected."""
    iu, ju = np.triu_indices(n, 1)
    while True:
        adj = np.zeros((n, n))
        keep = rng.random(len(iu)) < p
        adj[iu[keep], ju[keep]] = 1.0
        G = from_adjacency(adj)
        if is_connected(G):
            return G


def _climb_restart(args) -> ClimbOutcome:
    n, params, seed_seq = args
    rng = np.random.default_rng(seed_seq)
    return local_search(random_connected_graph(n, rng), params)


def hill_climb(
    n: int,
    params: ObjectiveParams,
    restarts: int = 20,
    rng_seed: int = 0,
    workers: int = 1,
) -> HillClimbResult:
    """Run ``restarts`` local searches from random connected graphs; keep the best.

    Restart ``i`` draws from the i-th child of ``SeedSequence(rng_seed)``, so
    results do not depend on ``workers``.
    """
    if n < 4:
        raise ValueError("hill climb needs n >= 4")
    if restarts < 1:
        raise ValueError("need at least one restart")
    seeds = np.random.SeedSequence(rng_seed).spawn(restarts)
    jobs = [(n, params, s) for s in seeds]
    if workers <= 1:
        outcomes = [_climb_restart(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_climb_restart, jobs))
    best = max(range(restarts), key=lambda i: (outcomes[i].value, -i))
    o = outcomes[best]
    return HillClimbResult(o.graph, o.value, o.trajectory, outcomes)


# -- partitions ----------------------------------------------------------------


@dataclass(frozen=True)
class PartitionDiagnostics:
    """S = {|z_v| < eps/sqrt(n)}, T = {x_v < 1/(2 sqrt(n))}, L = V \\ S, B/C = positive/negative z on L."""

    epsilon: float
    S: tuple[int, ...]
    T: tuple[int, ...]
    L: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]

    def to_dict(self) -> dict:
        return {k: getattr(self, k) if k == "epsilon" else list(getattr(self, k)) for k in "epsilon S T L B C".split()}


def partition_diagnostics(G: Graph, params: ObjectiveParams, epsilon: float = 0.1) -> PartitionDiagnostics:
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    ctx = toggle_context(G, params)
    root_n = math.sqrt(G.n)
    S = tuple(v for v in range(G.n) if abs(ctx.z[v]) < epsilon / root_n)
    T = tuple(v for v in range(G.n) if ctx.x[v] < 1.0 / (2.0 * root_n))
    L = tuple(v for v in range(G.n) if v not in S)
    B = tuple(v for v in L if ctx.z[v] > 0)
    C = tuple(v for v in L if ctx.z[v] < 0)
    return PartitionDiagnostics(epsilon, S, T, L, B, C)
