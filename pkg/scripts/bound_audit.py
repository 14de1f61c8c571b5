"""Audit the closed-form bounds over every connected graph up to a given order."""

import argparse

from alphaspread.bounds import check_hsf, check_lambda_n_delta, check_psd
from alphaspread.enumeration import enumerate_connected


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    alphas = [k / 10 for k in range(10)]
    gammas = [0.5, 0.6, 0.7, 0.8, 0.9]
    for n in range(2, args.max_n + 1):
        graphs = list(enumerate_connected(n))
        min_hsf = min(check_hsf(G, a).slack for G in graphs for a in alphas)
        min_psd = min(check_psd(G, g).slack for G in graphs for g in gammas)
        delta = [check_lambda_n_delta(G, a) for G in graphs for a in alphas[1:]]
        bad = sum(not r.satisfied for r in delta)
        print(f"n={n}: {len(graphs):>4} graphs  min hsf slack {min_hsf:.3e}  "
              f"min lambda_min(A_gamma) {min_psd:.3e}  lambda_n<alpha*delta failures {bad}")


if __name__ == "__main__":
    main()
