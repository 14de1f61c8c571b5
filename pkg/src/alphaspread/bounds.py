"""Closed-form eigenvalue bounds and inequality checks for A_alpha spectra.

Every check returns a :class:`BoundReport` oriented so that the claim reads
``lhs <= rhs`` (or ``lhs < rhs`` for strict claims) and ``slack = rhs - lhs``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import Graph, is_connected
from .spectra import ObjectiveParams, spectrum

TOL = 1e-9
STRICT_MARGIN = 1e-12


@dataclass(frozen=True)
class BoundReport:
    name: str
    lhs: float
    rhs: float
    satisfied: bool
    slack: float
    strict: bool = False
    applicable: bool = True
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "strict": self.strict,
            "satisfied": self.satisfied,
            "applicable": self.applicable,
            **({"extra": self.extra} if self.extra else {}),
        }


def _report(name: str, lhs: float, rhs: float, strict: bool, tol: float = TOL, **extra) -> BoundReport:
    slack = rhs - lhs
    ok = slack > STRICT_MARGIN if strict else slack >= -tol
    return BoundReport(name, float(lhs), float(rhs), bool(ok), float(slack), strict, True, extra)


def hsf_upper_bound(G: Graph, alpha: float, relaxed: bool = False) -> float:
    """Upper bound on lambda_max(A_alpha(G)) from n, e(G), min and max degree.

    ``relaxed=True`` substitutes n-1 for the maximum degree.
    """
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha={alpha} outside [0, 1)")
    n, m = G.n, G.num_edges
    delta = G.min_degree
    Delta = n - 1 if relaxed else G.max_degree
    a = (1.0 - alpha) * (delta - 1)
    disc = a * a + 4.0 * (alpha * Delta**2 + (1.0 - alpha) * (2 * m - (n - 1) * delta))
    return (a + math.sqrt(disc)) / 2.0


def check_hsf(G: Graph, alpha: float, tol: float = TOL) -> BoundReport:
    lam = spectrum(G, alpha).lambda_max
    return _report("hsf_upper_bound", lam, hsf_upper_bound(G, alpha), strict=False, tol=tol)


def check_psd(G: Graph, gamma: float, tol: float = TOL) -> BoundReport:
    """A_gamma(G) is positive semidefinite for gamma in [1/2, 1)."""
    if not 0.5 <= gamma < 1.0:
        raise ValueError(f"gamma={gamma} outside [1/2, 1); PSD is not claimed there")
    lam = spectrum(G, gamma).lambda_min
    return _report("psd", 0.0, lam, strict=False, tol=tol)


def check_lambda_n_delta(G: Graph, alpha: float) -> BoundReport:
    """lambda_min(A_alpha(G)) < alpha * min degree. Inapplicable to edgeless graphs."""
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha={alpha} outside [0, 1)")
    lam = spectrum(G, alpha).lambda_min
    rhs = alpha * G.min_degree
    if G.num_edges == 0:
        return BoundReport("lambda_min_below_alpha_delta", lam, rhs, False, rhs - lam, True, False)
    return _report("lambda_min_below_alpha_delta", lam, rhs, strict=True)


def check_maximizer_inequalities(G: Graph, params: ObjectiveParams, tol: float = TOL) -> list[BoundReport]:
    """Necessary conditions on a maximizer of the generalized spread objective.

    These hold for the extremal graph, not for arbitrary graphs; a failing
    report rules ``G`` out as a maximizer. Reports, in order:

    * ``maximizer_lambda1``: lambda_max(A_alpha) > n - 2 - beta*gamma
    * ``maximizer_lambda_n``: 0 <= lambda_min(A_gamma) < 2/beta, with the
      sharper (1 + beta*gamma)/beta threshold carried in ``extra``
    * ``maximizer_edge_count``: 2e(G) > n^2 - (3 - alpha + 2*beta)/(1 - alpha) * n
    """
    if not is_connected(G):
        raise ValueError("maximizer diagnostics need a connected graph")
    a, b, g = params.alpha, params.beta, params.gamma
    n = G.n
    top = spectrum(G, a)
    bottom = top if g == a else spectrum(G, g)
    lam1, lamn = top.lambda_max, bottom.lambda_min

    r1 = _report("maximizer_lambda1", n - 2 - b * g, lam1, strict=True)

    sharp = (1.0 + b * g) / b
    upper = _report("maximizer_lambda_n", lamn, 2.0 / b, strict=True)
    nonneg = lamn >= -tol
    r2 = BoundReport(
        upper.name, upper.lhs, upper.rhs, upper.satisfied and nonneg, upper.slack, True, True,
        {
            "lower_bound": 0.0,
            "lower_satisfied": bool(nonneg),
            "sharp_threshold": sharp,
            "sharp_slack": sharp - lamn,
            "sharp_satisfied": bool(sharp - lamn > STRICT_MARGIN),
        },
    )

    r3 = _report(
        "maximizer_edge_count", n * n - (3.0 - a + 2.0 * b) / (1.0 - a) * n, 2.0 * G.num_edges, strict=True
    )
    return [r1, r2, r3]
