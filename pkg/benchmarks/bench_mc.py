"""Benchmark the Monte Carlo integrand kernels: numba @njit vs pure numpy.

Both backends consume the same uniform-variate arrays, so the comparison is
arithmetic-for-arithmetic.  The numba path is warmed up (JIT-compiled) before
timing.  Run:

    python3 benchmarks/bench_mc.py [--samples N] [--repeats K]
"""

import argparse
import os
import time

import numpy as np

from h2ent._mc_kernels import KIND_CODES, active_backend, integrand_samples

S_VALUE = 1.67


def time_backend(kind_code, u, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        vals = integrand_samples(kind_code, S_VALUE, u)
        best = min(best, time.perf_counter() - t0)
    return best, float(vals.mean())


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=2_000_000)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(123)
    u = np.clip(rng.random((args.samples, 8)), 1e-16, 1.0 - 1e-16)

    os.environ.pop("H2E_NO_NUMBA", None)
    have_numba = active_backend() == "numba"
    if have_numba:
        print("warming up numba JIT ...")
        for code in KIND_CODES.values():
            integrand_samples(code, S_VALUE, u[:1000])
    else:
        print("numba unavailable; only the numpy path will run")

    print(f"\nsamples per call: {args.samples}, best of {args.repeats} repeats")
    print(f"{'kind':<6} {'numpy [s]':>10} {'numba [s]':>10} {'speedup':>8}   mean check")
    for kind, code in sorted(KIND_CODES.items()):
        os.environ["H2E_NO_NUMBA"] = "1"
        t_np, m_np = time_backend(code, u, args.repeats)
        row = f"{kind:<6} {t_np:>10.3f}"
        if have_numba:
            os.environ.pop("H2E_NO_NUMBA", None)
            t_nb, m_nb = time_backend(code, u, args.repeats)
            row += f" {t_nb:>10.3f} {t_np / t_nb:>7.2f}x   |mean diff| = {abs(m_np - m_nb):.2e}"
        print(row)
    os.environ.pop("H2E_NO_NUMBA", None)


if __name__ == "__main__":
    main()
