"""Command-line front end.

Exit status: 0 on success, 2 for invalid parameters or input, 3 for numerical
failure (solver non-convergence or a non-finite number in the report).

Parameter flags take comma lists and expand to one report row per
combination. ``--gamma`` defaults to the ``--alpha`` value of each row.
The worker count defaults to ``$ALPHASPREAD_WORKERS`` (or 1).
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__, bounds, search, spectra
from .enumeration import is_isomorphic
from .graph import Graph, complete, is_connected, join_clique_independent, kite, path, star
from .graph6 import file_sha256, graph6_decode, graph6_encode, read_graph6_file
from .spectra import ConvergenceError, ObjectiveParams

COMMANDS = ("spectrum", "spread", "objective", "bounds", "verify", "crosscheck", "search", "partitions")
OBJECTIVE_COMMANDS = {"objective", "bounds", "verify", "search", "partitions"}
TABULAR_COMMANDS = {"verify", "crosscheck"}
FAMILIES = {"kite": kite, "complete": complete, "path": path, "star": star, "join": join_clique_independent}
WORKERS_ENV = "ALPHASPREAD_WORKERS"


class NumericalError(ArithmeticError):
    pass


@dataclass
class RunConfig:
    command: str
    n: list[int] = field(default_factory=list)
    alpha: list[float] = field(default_factory=lambda: [0.5])
    beta: list[float] = field(default_factory=lambda: [1.0])
    gamma: list[float] | None = None
    epsilon: float = 0.1
    graph: str | None = None
    graph6: str | None = None
    input_path: str | None = None
    output_path: str | None = None
    format: str = "json"
    seed: int = 0
    restarts: int = 20
    residual_tol: float = spectra.RESIDUAL_TOL
    workers: int = 1

    def param_rows(self) -> list[tuple[float, float, float]]:
        rows = []
        for a, b in itertools.product(self.alpha, self.beta):
            for g in self.gamma if self.gamma is not None else [a]:
                rows.append((a, b, g))
        return rows

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.format == "csv" and self.command not in TABULAR_COMMANDS:
            raise ValueError("csv output is only available for verify and crosscheck")
        if not self.residual_tol > 0:
            raise ValueError("residual tolerance must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.command in OBJECTIVE_COMMANDS:
            for a, b, g in self.param_rows():
                ObjectiveParams(a, b, g)
        else:
            closed = self.command == "spectrum"  # A_1 = D is still a valid matrix
            for a in self.alpha:
                if not (0.0 <= a <= 1.0 if closed else 0.0 <= a < 1.0):
                    raise ValueError(f"alpha={a} outside [0, 1{']' if closed else ')'}")
        if self.command in ("verify", "crosscheck", "search") and not self.n:
            raise ValueError(f"{self.command} needs --n")
        if self.command == "search" and self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if self.graph is not None and self.graph not in FAMILIES:
            raise ValueError(f"unknown graph family {self.graph!r}")


def _graphs(cfg: RunConfig) -> list[Graph]:
    if cfg.graph6 is not None:
        return [graph6_decode(cfg.graph6)]
    if cfg.graph is not None:
        if not cfg.n:
            raise ValueError("--graph needs --n")
        return [FAMILIES[cfg.graph](n) for n in cfg.n]
    if cfg.input_path is not None:
        return read_graph6_file(cfg.input_path)
    raise ValueError("give one of --graph6, --graph, or --input")


def _catalog_for(cfg: RunConfig, n: int) -> list[Graph] | None:
    if cfg.input_path is None:
        return None
    return [G for G in read_graph6_file(cfg.input_path) if G.n == n]


def _rows(cfg: RunConfig) -> list[dict]:
    rows: list[dict] = []
    cmd = cfg.command
    if cmd == "spectrum":
        for G, a in itertools.product(_graphs(cfg), cfg.alpha):
            res = spectra.spectrum(G, a)
            rows.append({
                "graph6": graph6_encode(G), "n": G.n, "alpha": a,
                "eigenvalues": res.eigenvalues.tolist(),
                "max_residual": res.max_residual,
                "orthonormality_defect": res.orthonormality_defect(),
            })
    elif cmd == "spread":
        for G, a in itertools.product(_graphs(cfg), cfg.alpha):
            res = spectra.spectrum(G, a)
            rows.append({
                "graph6": graph6_encode(G), "n": G.n, "alpha": a,
                "spread": res.lambda_max - res.lambda_min,
                "lambda_max": res.lambda_max, "lambda_min": res.lambda_min,
            })
    elif cmd == "objective":
        for G, (a, b, g) in itertools.product(_graphs(cfg), cfg.param_rows()):
            lam1 = spectra.spectrum(G, a).lambda_max
            lamn = spectra.spectrum(G, g).lambda_min
            rows.append({
                "graph6": graph6_encode(G), "n": G.n, "alpha": a, "beta": b, "gamma": g,
                "objective": spectra.objective(G, ObjectiveParams(a, b, g)),
                "lambda_max_alpha": lam1, "lambda_min_gamma": lamn,
            })
    elif cmd == "bounds":
        for G, (a, b, g) in itertools.product(_graphs(cfg), cfg.param_rows()):
            reports = [bounds.check_hsf(G, a), bounds.check_lambda_n_delta(G, a), bounds.check_psd(G, g)]
            row = {"graph6": graph6_encode(G), "n": G.n, "alpha": a, "beta": b, "gamma": g,
                   "hsf_upper_bound": bounds.hsf_upper_bound(G, a),
                   "hsf_upper_bound_relaxed": bounds.hsf_upper_bound(G, a, relaxed=True)}
            if is_connected(G):
                reports += bounds.check_maximizer_inequalities(G, ObjectiveParams(a, b, g))
            row["reports"] = [r.to_dict() for r in reports]
            rows.append(row)
    elif cmd == "verify":
        for n, (a, b, g) in itertools.product(cfg.n, cfg.param_rows()):
            rep = search.exhaustive_verify(n, ObjectiveParams(a, b, g), _catalog_for(cfg, n), cfg.workers)
            rows.append(rep.to_dict())
    elif cmd == "crosscheck":
        for n in cfg.n:
            rows.append(search.adjacency_spread_crosscheck(n, _catalog_for(cfg, n), cfg.workers).to_dict())
    elif cmd == "search":
        for n, (a, b, g) in itertools.product(cfg.n, cfg.param_rows()):
            p = ObjectiveParams(a, b, g)
            res = search.hill_climb(n, p, cfg.restarts, cfg.seed, cfg.workers)
            rows.append({
                "n": n, "alpha": a, "beta": b, "gamma": g,
                "best_graph6": graph6_encode(res.best), "value": res.value,
                "kite_value": spectra.objective(kite(n), p),
                "best_is_kite": is_isomorphic(res.best, kite(n)),
                "restarts_reaching_kite": sum(is_isomorphic(o.graph, kite(n)) for o in res.outcomes),
                "restart_values": [o.value for o in res.outcomes],
                "trajectory": [[s, v] for s, v in res.trajectory],
            })
    elif cmd == "partitions":
        for G, (a, b, g) in itertools.product(_graphs(cfg), cfg.param_rows()):
            d = search.partition_diagnostics(G, ObjectiveParams(a, b, g), cfg.epsilon)
            rows.append({"graph6": graph6_encode(G), "n": G.n, "alpha": a, "beta": b, "gamma": g, **d.to_dict()})
    return rows


def _check_finite(obj) -> None:
    if isinstance(obj, float) and not math.isfinite(obj):
        raise NumericalError("non-finite number in report")
    if isinstance(obj, dict):
        for v in obj.values():
            _check_finite(v)
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            _check_finite(v)


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def build_report(cfg: RunConfig) -> dict:
    cfg.validate()
    spectra.config.residual_tol = cfg.residual_tol
    provenance = {
        "version": __version__,
        "parameters": {k: v for k, v in asdict(cfg).items() if k not in ("output_path", "format", "workers")},
        "tolerances": {
            "residual": cfg.residual_tol,
            "jacobi_offdiag": spectra.OFFDIAG_TOL,
            "jacobi_max_sweeps": spectra.config.max_sweeps,
            "uniqueness_gap": search.UNIQUENESS_GAP,
            "degeneracy_gap": search.DEGENERACY_GAP,
            "improvement_eps": search.IMPROVEMENT_EPS,
            "bound_tol": bounds.TOL,
            "strict_margin": bounds.STRICT_MARGIN,
        },
        "seed": cfg.seed,
        "catalog_sha256": file_sha256(cfg.input_path) if cfg.input_path else None,
    }
    report = _plain({"command": cfg.command, "provenance": provenance, "rows": _rows(cfg)})
    _check_finite(report)
    return report


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, allow_nan=False) + "\n"
    rows = report["rows"]
    keys = sorted({k for r in rows for k in r})
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        text = render(build_report(cfg), cfg.format)
    except (ConvergenceError, NumericalError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if cfg.output_path:
        Path(cfg.output_path).write_text(text)
    else:
        stdout.write(text)
    return 0


def _floats(s: str) -> list[float]:
    try:
        return [float(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of numbers: {s!r}") from None


def _ints(s: str) -> list[int]:
    try:
        return [int(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {s!r}") from None


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alphaspread", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--n", type=_ints, default=[], help="vertex count(s), comma separated")
    parser.add_argument("--alpha", type=_floats, default=[0.5])
    parser.add_argument("--beta", type=_floats, default=[1.0])
    parser.add_argument("--gamma", type=_floats, default=None, help="defaults to each alpha")
    parser.add_argument("--epsilon", type=float, default=0.1)
    parser.add_argument("--graph", choices=sorted(FAMILIES), default=None)
    parser.add_argument("--graph6", default=None, help="a single graph6 line")
    parser.add_argument("--input", dest="input_path", default=None, help="graph6 catalog file")
    parser.add_argument("--output", dest="output_path", default=None)
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--restarts", type=int, default=20)
    parser.add_argument("--tol", dest="residual_tol", type=float, default=spectra.RESIDUAL_TOL,
                        help="eigen-residual tolerance")
    parser.add_argument("--workers", type=int, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    kw = vars(ns)
    if kw["workers"] is None:
        try:
            kw["workers"] = int(os.environ.get(WORKERS_ENV, "1"))
        except ValueError:
            print(f"error: {WORKERS_ENV} must be an integer", file=sys.stderr)
            return 2
    return run(RunConfig(**kw))


if __name__ == "__main__":
    sys.exit(main())
