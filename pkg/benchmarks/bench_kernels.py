"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--trials 200000]
"""

import argparse
import time

import numpy as np

from copydetect.kernels import numba_impl, numpy_impl


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--trials", type=int, default=200_000)
    args = ap.parse_args()

    if numba_impl is None:
        raise SystemExit("numba backend unavailable (COPYDETECT_NO_NUMBA set or numba missing)")

    rng = np.random.default_rng(0)
    cases = []

    for n in (16, 256):
        pair = rng.dirichlet(np.ones(4)).reshape(2, 2)
        c0, c1 = rng.dirichlet(np.ones(n)), rng.dirichlet(np.ones(n))
        cases.append((f"combine_children n={n}", lambda impl, a=(pair, c0, c1): impl.combine_children(*a)))

    fail_cdf = np.cumsum([0.4, 0.1, 0.1, 0.4])
    leaf_plus = np.array([0.06, 0.6])
    for depth in (1, 3, 5):
        n_leaves = 1 << depth
        u = rng.random((args.trials, 2 * (n_leaves - 1) + n_leaves))
        cases.append(
            (
                f"sample_patterns depth={depth} trials={args.trials}",
                lambda impl, a=(1, depth, 0.9, fail_cdf, leaf_plus, u): impl.sample_patterns(*a),
            )
        )

    print(f"{'kernel':<42} {'numpy [ms]':>11} {'numba [ms]':>11} {'speedup':>8}")
    for name, call in cases:
        call(numba_impl)  # compile outside the timed region
        t_np = best_of(lambda: call(numpy_impl), args.repeat)
        t_nb = best_of(lambda: call(numba_impl), args.repeat)
        print(f"{name:<42} {t_np * 1e3:11.3f} {t_nb * 1e3:11.3f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()
