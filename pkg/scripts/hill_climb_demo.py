"""Random-restart hill climbing on connected n-vertex graphs, compared against the kite."""

import argparse
import time

from alphaspread.enumeration import is_isomorphic
from alphaspread.graph import kite
from alphaspread.graph6 import graph6_encode
from alphaspread.search import hill_climb
from alphaspread.spectra import ObjectiveParams, objective


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=15)
    ap.add_argument("--alpha", type=float, default=0.5)
    ap.add_argument("--beta", type=float, default=1.0)
    ap.add_argument("--gamma", type=float, default=0.5)
    ap.add_argument("--restarts", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    p = ObjectiveParams(args.alpha, args.beta, args.gamma)
    t = time.perf_counter()
    res = hill_climb(args.n, p, restarts=args.restarts, rng_seed=args.seed, workers=args.workers)
    elapsed = time.perf_counter() - t
    K = kite(args.n)
    for i, o in enumerate(res.outcomes):
        tag = "kite" if is_isomorphic(o.graph, K) else graph6_encode(o.graph)
        print(f"restart {i:>3}: {len(o.moves):>3} moves  value {o.value:.10f}  {tag}")
    print(f"best {res.value:.12f}  kite {objective(K, p):.12f}  ({elapsed:.1f}s)")


if __name__ == "__main__":
    main()
