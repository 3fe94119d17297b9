"""Compare the compiled and pure-numpy solver backends on identical problems.

    python benchmarks/bench_kernels.py [--samples 20000] [--m 16] [--repeats 3]

Each problem batch is a random lateral matrix ``M = A A^T + 0.1 I`` and
drives ``B = W X`` for Gaussian inputs, i.e. what one conv-NSM minibatch
hands to the solver. Prints seconds per backend and the maximum output
difference between them.
"""

import argparse
import time

import numpy as np

from simatch.dynamics import DynamicsConfig, solve_batch
from simatch.kernels import BACKENDS


def problem(m, n, samples, seed):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(m, m)) / np.sqrt(m)
    M = A @ A.T + 0.1 * np.eye(m)
    W = rng.normal(size=(m, n)) / np.sqrt(n)
    return W @ rng.normal(size=(n, samples)), M


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=20000)
    parser.add_argument("--m", type=int, default=16)
    parser.add_argument("--n", type=int, default=75)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--polish-every", type=int, default=10)
    args = parser.parse_args(argv)
    B, M = problem(args.m, args.n, args.samples, 0)
    config = DynamicsConfig(polish_every=args.polish_every)
    results = {}
    print(f"samples={args.samples} m={args.m} polish_every={args.polish_every}")
    for name in sorted(BACKENDS):
        best = np.inf
        for _ in range(args.repeats):
            t = time.perf_counter()
            Z, iters, _ = solve_batch(B, M, config, backend=name)
            best = min(best, time.perf_counter() - t)
        results[name] = Z
        print(f"{name:>9}: {best:.4f} s  ({args.samples / best:,.0f} samples/s, mean iterations {iters.mean():.1f})")
    if len(results) == 2:
        diff = np.max(np.abs(results["compiled"] - results["python"]))
        print(f"max |compiled - python| = {diff:.3e}")
    else:
        print("compiled extension not built; only the python backend ran")


if __name__ == "__main__":
    main()
