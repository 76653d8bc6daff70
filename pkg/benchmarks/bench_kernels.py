"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--max-p 800] [--repeat 3]
"""

import argparse
import time

import numpy as np

from adicseq import _accel
from adicseq.complexity import linear_complexity, two_adic_complexity
from adicseq.numtheory import admissible_primes, build_params
from adicseq.seqcore import BVector, construct_u


def best_of(fn, arg, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-p", type=int, default=800)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not _accel.HAVE_NUMBA:
        print("numba not installed; only the numpy path is available")

    # warm the JIT
    warm = np.zeros(8, dtype=np.uint8)
    _accel.autocorr_spectrum_numba(warm)
    _accel.berlekamp_massey_numba(warm)

    print(f"{'p':>5} {'N':>5} | {'autocorr numpy':>14} {'numba':>9} {'x':>6} | {'BM numpy':>9} {'numba':>9} {'x':>6} | {'2-adic':>8}")
    for p in admissible_primes(args.max_p):
        u = construct_u(build_params(p), BVector(0, 0, 0, 0))
        bits = u.bits
        two = np.tile(bits, 2)
        a_np = best_of(_accel.autocorr_spectrum_numpy, bits, args.repeat)
        a_nb = best_of(_accel.autocorr_spectrum_numba, bits, args.repeat)
        b_np = best_of(_accel.berlekamp_massey_numpy, two, args.repeat)
        b_nb = best_of(_accel.berlekamp_massey_numba, two, args.repeat)
        adic = best_of(two_adic_complexity, u, args.repeat)
        assert np.array_equal(_accel.autocorr_spectrum_numpy(bits), _accel.autocorr_spectrum_numba(bits))
        assert _accel.berlekamp_massey_numpy(two) == _accel.berlekamp_massey_numba(two) == linear_complexity(u)
        print(
            f"{p:>5} {4 * p:>5} | {a_np * 1e3:>12.2f}ms {a_nb * 1e3:>7.2f}ms {a_np / a_nb:>6.1f} |"
            f" {b_np * 1e3:>7.2f}ms {b_nb * 1e3:>7.2f}ms {b_np / b_nb:>6.1f} | {adic * 1e3:>6.2f}ms"
        )


if __name__ == "__main__":
    main()
