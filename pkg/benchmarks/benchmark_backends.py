"""Benchmark the compiled extension against the pure-numpy fallback.

Times the two hot kernels on Monte Carlo-shaped workloads and verifies that
both backends agree bit for bit.  Run:

    python benchmarks/benchmark_backends.py
"""

import time

import numpy as np

from vehaz._core import _fallback

try:
    from vehaz._core import _speedups
except ImportError:
    _speedups = None


def timeit(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_hazard_grid(impl, n=1600, m=512, reps=50):
    rng = np.random.default_rng(1)
    x = np.sort(rng.exponential(size=n))
    delta = rng.integers(0, 2, size=n)
    w = delta / (n - np.arange(n, dtype=float))
    b = n ** -0.2
    grid = np.linspace(b, 1.27, m)

    def run():
        for _ in range(reps):
            impl.hazard_grid(x, w, b, 1.0, 2, False, grid)

    return timeit(run), impl.hazard_grid(x, w, b, 1.0, 2, False, grid)


def bench_distances(impl, m_src=512, m_tgt=512, reps=50):
    rng = np.random.default_rng(2)
    qx = np.linspace(0.0, 1.3, m_tgt)
    qy = 1.0 + 0.2 * np.sin(5 * qx) + rng.normal(0, 0.05, m_tgt)
    px = np.linspace(0.0, 1.3, m_src)
    py = np.ones(m_src)

    def run():
        for _ in range(reps):
            impl.polyline_min_dists(px, py, qx, qy)

    return timeit(run), impl.polyline_min_dists(px, py, qx, qy)


def main():
    impls = [("python ", _fallback)]
    if _speedups is not None:
        impls.append(("compiled", _speedups))
    print(f"{'kernel':<22} {'backend':<9} {'time':>10}   speedup")
    for name, bench in (("hazard_grid n=1600", bench_hazard_grid),
                        ("polyline_dists 512x512", bench_distances)):
        base_time = None
        base_out = None
        for label, impl in impls:
            t, out = bench(impl)
            if base_time is None:
                base_time, base_out = t, out
                speed = "1.0x"
            else:
                speed = f"{base_time / t:.1f}x"
                identical = np.array_equal(out, base_out)
                speed += "  (bit-identical)" if identical else "  (MISMATCH!)"
            print(f"{name:<22} {label:<9} {t * 1e3:9.2f}ms   {speed}")
    if _speedups is None:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
