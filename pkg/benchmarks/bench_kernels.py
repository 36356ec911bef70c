"""Compare the compiled and pure-Python kernel backends on hot workloads.

Run with ``python3 benchmarks/bench_kernels.py``.  Each workload is sized
like the heaviest uses inside the package (rank scans of stacked row
selections, digit-block matrix products, expansion of long polynomials)
and repeated until the faster backend accumulates a stable total.
"""

import time

import numpy as np

from ffseq import field_create, get_backend
from ffseq.kernels import matmul, padic_expand, poly_mul, rank

RNG = np.random.default_rng(11)


def timeit(fn, repeats):
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeats):
            fn()
        best = min(best, (time.perf_counter() - t0) / repeats)
    return best


def workloads():
    gf2 = field_create(2).tables()
    gf9 = field_create(3, 2).tables()

    big2 = RNG.integers(0, 2, size=(64, 64)).astype(np.uint16)
    big9 = RNG.integers(0, 9, size=(48, 48)).astype(np.uint16)
    yield "rank 64x64 GF(2)", gf2, lambda t, b: rank(big2, t, backend=b), 40
    yield "rank 48x48 GF(9)", gf9, lambda t, b: rank(big9, t, backend=b), 40

    mat = RNG.integers(0, 2, size=(16, 512)).astype(np.uint16)
    dig = RNG.integers(0, 2, size=(512, 4096)).astype(np.uint16)
    yield "matmul 16x512 by 512x4096 GF(2)", gf2, lambda t, b: matmul(mat, dig, t, backend=b), 2

    a = RNG.integers(0, 9, size=400).astype(np.uint16)
    c = RNG.integers(0, 9, size=400).astype(np.uint16)
    yield "poly_mul 400x400 GF(9)", gf9, lambda t, b: poly_mul(a, c, t, backend=b), 10

    f = RNG.integers(0, 2, size=2000).astype(np.uint16)
    p = np.array([1, 1, 0, 1], dtype=np.uint16)
    yield "padic_expand deg 2000 by deg 3 GF(2)", gf2, lambda t, b: padic_expand(f, p, 600, t, backend=b), 20


def main():
    print(f"default backend: {get_backend()}")
    header = f"{'workload':<40} {'python':>12} {'cython':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, tables, fn, repeats in workloads():
        t_py = timeit(lambda: fn(tables, "python"), repeats)
        try:
            t_cy = timeit(lambda: fn(tables, "cython"), repeats)
        except RuntimeError:
            print(f"{name:<40} {t_py * 1e3:>10.3f}ms {'n/a':>12} {'':>9}")
            continue
        print(f"{name:<40} {t_py * 1e3:>10.3f}ms {t_cy * 1e3:>10.3f}ms {t_py / t_cy:>8.1f}x")


if __name__ == "__main__":
    main()
