"""Exhaustive maximizer search over a parameter grid; prints one row per (n, params)."""

import argparse
import itertools

from alphaspread.search import exhaustive_verify
from alphaspread.spectra import ObjectiveParams


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[5, 6, 7])
    ap.add_argument("--alpha", type=float, nargs="+", default=[0.0, 0.25, 0.5, 0.75, 0.9])
    ap.add_argument("--gamma", type=float, nargs="+", default=[0.5, 0.75, 0.9])
    ap.add_argument("--beta-gamma", type=float, nargs="+", default=[0.25, 0.5, 1.0],
                    help="values of the product beta*gamma; beta is derived per gamma")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>2} {'alpha':>6} {'beta':>7} {'gamma':>6} {'maximizer':>10} {'gap':>10}  kite")
    for n, a, g, bg in itertools.product(args.n, args.alpha, args.gamma, args.beta_gamma):
        r = exhaustive_verify(n, ObjectiveParams(a, bg / g, g), workers=args.workers)
        flag = "tie" if r.tie else ("yes" if r.kite_is_unique_max else "no")
        print(f"{n:>2} {a:>6.3g} {bg / g:>7.4g} {g:>6.3g} {r.maximizer:>10} {r.gap:>10.3g}  {flag}")


if __name__ == "__main__":
    main()
