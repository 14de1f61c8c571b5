"""A_alpha matrices, a cyclic Jacobi eigensolver, and the spread objectives built on them."""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .graph import Graph, is_connected

RESIDUAL_TOL = 1e-8
MAX_SWEEPS = 100
OFFDIAG_TOL = 1e-12


@dataclass
class SolverConfig:
    residual_tol: float = RESIDUAL_TOL
    max_sweeps: int = MAX_SWEEPS


config = SolverConfig()


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class ObjectiveParams:
    """Parameters of lambda_max(A_alpha) - beta * lambda_min(A_gamma).

    Valid region: 0 <= alpha < 1, 1/2 <= gamma < 1, 0 < beta*gamma <= 1.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha < 1.0:
            raise ValueError(f"alpha={self.alpha} outside [0, 1)")
        if not 0.5 <= self.gamma < 1.0:
            raise ValueError(f"gamma={self.gamma} outside [1/2, 1)")
        if not self.beta > 0.0:
            raise ValueError(f"beta={self.beta} must be positive")
        if self.beta * self.gamma > 1.0 + 1e-12:
            raise ValueError(f"beta*gamma={self.beta * self.gamma} exceeds 1")


@dataclass(frozen=True)
class SpectralResult:
    """Ascending eigenvalues with matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    max_residual: float
    sweeps: int

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[0])

    def orthonormality_defect(self) -> float:
        V = self.eigenvectors
        return float(np.max(np.abs(V.T @ V - np.eye(V.shape[1])))) if V.size else 0.0

    def top_gap(self) -> float:
        ev = self.eigenvalues
        return float(ev[-1] - ev[-2]) if len(ev) > 1 else np.inf

    def bottom_gap(self) -> float:
        ev = self.eigenvalues
        return float(ev[1] - ev[0]) if len(ev) > 1 else np.inf


def a_alpha_from_adjacency(adj: np.ndarray, alpha: float) -> np.ndarray:
    M = (1.0 - alpha) * adj
    M[np.diag_indices_from(M)] = alpha * adj.sum(axis=1)
    return M


def a_alpha_matrix(G: Graph, alpha: float) -> np.ndarray:
    """alpha*D(G) + (1-alpha)*A(G). alpha=1 is allowed and gives D(G)."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha={alpha} outside [0, 1]")
    return a_alpha_from_adjacency(G.adjacency(), alpha)


@numba.njit(cache=True)
def _jacobi(a, tol, max_sweeps):
    n = a.shape[0]
    v = np.eye(n)
    fro = np.sqrt(np.sum(a * a))
    thresh = tol * (1.0 + fro)
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j] * a[i, j]
        if np.sqrt(off) <= thresh:
            return a, v, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    return a, v, -1


def normalize_signs(V: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude entry of each column nonnegative (lowest index wins ties)."""
    V = V.copy()
    for k in range(V.shape[1]):
        i = int(np.argmax(np.abs(V[:, k])))
        if V[i, k] < 0:
            V[:, k] = -V[:, k]
    return V


def eig_sym(M: np.ndarray, residual_tol: float | None = None, max_sweeps: int | None = None) -> SpectralResult:
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Stops once the off-diagonal Frobenius norm drops below
    ``1e-12 * (1 + ||M||_F)``; raises ``ConvergenceError`` if that takes more
    than ``max_sweeps`` sweeps or the final residual exceeds ``residual_tol``.
    Unset limits come from the module-level ``config``.
    """
    residual_tol = config.residual_tol if residual_tol is None else residual_tol
    max_sweeps = config.max_sweeps if max_sweeps is None else max_sweeps
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.array_equal(M, M.T):
        raise ValueError("matrix is not symmetric")
    D, V, sweeps = _jacobi(M.copy(), OFFDIAG_TOL, max_sweeps)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not converge within {max_sweeps} sweeps")
    w = np.diag(D).copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    V = normalize_signs(V[:, order])
    resid = float(np.max(np.linalg.norm(M @ V - V * w, axis=0))) if len(w) else 0.0
    if not resid <= residual_tol:
        raise ConvergenceError(f"eigen-residual {resid:.3e} exceeds tolerance {residual_tol:.1e}")
    return SpectralResult(w, V, resid, sweeps)


def spectrum(G: Graph, alpha: float) -> SpectralResult:
    return eig_sym(a_alpha_matrix(G, alpha))


def lambda_extremes(G: Graph, alpha: float) -> tuple[float, float, np.ndarray, np.ndarray]:
    """(lambda_max, lambda_min, unit eigenvector for each) of A_alpha(G).

    For connected G and alpha < 1 the top vector is the Perron vector and
    comes out entrywise nonnegative.
    """
    res = spectrum(G, alpha)
    x_max = res.eigenvectors[:, -1]
    x_min = res.eigenvectors[:, 0]
    if alpha < 1.0 and is_connected(G):
        if x_max.min() < -1e-9:
            raise ConvergenceError("Perron vector of a connected graph has a negative entry")
        x_max = np.maximum(x_max, 0.0)
    return res.lambda_max, res.lambda_min, x_max, x_min


def _check_vector(G: Graph, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (G.n,):
        raise ValueError(f"vector of length {x.shape} does not match n={G.n}")
    return x


def quadratic_form(G: Graph, alpha: float, x) -> float:
    """<A_alpha x, x> as a sum over edges of alpha*(x_u - x_v)^2 + 2*x_u*x_v."""
    x = _check_vector(G, x)
    e = G.edge_array
    xu, xv = x[e[:, 0]], x[e[:, 1]]
    return float(np.sum(alpha * (xu - xv) ** 2 + 2.0 * xu * xv))


def quadratic_form_alt(G: Graph, alpha: float, x) -> float:
    """<A_alpha x, x> as (2a-1)*sum_u d(u) x_u^2 + (1-a)*sum_uv (x_u + x_v)^2."""
    x = _check_vector(G, x)
    e = G.edge_array
    d = np.asarray(G.degrees, dtype=float)
    return float((2.0 * alpha - 1.0) * np.sum(d * x * x) + (1.0 - alpha) * np.sum((x[e[:, 0]] + x[e[:, 1]]) ** 2))


def eigen_residual(G: Graph, alpha: float, lam: float, x) -> float:
    """max_u |lam*x_u - alpha*d(u)*x_u - (1-alpha)*sum_{v~u} x_v|."""
    x = _check_vector(G, x)
    d = np.asarray(G.degrees, dtype=float)
    nbr_sum = G.adjacency() @ x
    return float(np.max(np.abs(lam * x - alpha * d * x - (1.0 - alpha) * nbr_sum)))


def spread(G: Graph, alpha: float) -> float:
    res = spectrum(G, alpha)
    return res.lambda_max - res.lambda_min


def objective_from_adjacency(adj: np.ndarray, params: ObjectiveParams) -> float:
    top = eig_sym(a_alpha_from_adjacency(adj, params.alpha))
    if params.gamma == params.alpha:
        bottom = top
    else:
        bottom = eig_sym(a_alpha_from_adjacency(adj, params.gamma))
    return top.lambda_max - params.beta * bottom.lambda_min


def objective(G: Graph, params: ObjectiveParams) -> float:
    """lambda_max(A_alpha(G)) - beta * lambda_min(A_gamma(G))."""
    return objective_from_adjacency(G.adjacency(), params)
