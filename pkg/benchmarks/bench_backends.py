#!/usr/bin/env python3
"""Benchmark the compiled grid-scan kernels against the numpy fallback.

Run from a shell where the package is installed:

    python3 benchmarks/bench_backends.py
"""

import importlib
import math
import time

import numpy as np


def load_backends():
    backends = {}
    try:
        backends["cython"] = importlib.import_module(
            "gregstar.backend._kernels_c")
    except ImportError:
        print("compiled backend not available; benchmarking numpy only")
    backends["numpy"] = importlib.import_module("gregstar.backend._kernels_np")
    return backends


def bench(fn, *args, repeats=3):
    best = math.inf
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    backends = load_backends()
    rs = np.linspace(0.0, 1.0, 512)
    ts = np.linspace(0.0, math.pi, 512)
    tau1s = np.linspace(0.0, 1.0, 100)
    rr = np.linspace(0.0, 1.0, 50)
    phis = np.linspace(0.0, 2 * math.pi, 64, endpoint=False)
    psis = np.linspace(0.0, 2 * math.pi, 64, endpoint=False)

    rows = []
    for name, mod in backends.items():
        t_grid, g = bench(mod.disk_quad_grid, 0.3, -1.1, 0.7, rs, ts)
        t_win, w = bench(mod.disk_quad_window_max,
                         0.3, -1.1, 0.7, 0.0, 1.0, 0.0, math.pi, 257, 257)
        t_h, h = bench(mod.hankel_tau_max, tau1s, rr, phis, psis)
        rows.append((name, t_grid, t_win, t_h,
                     float(np.max(g)), w[0], h[0]))

    print(f"{'backend':8s} {'quad grid 512^2':>16s} {'window 257^2':>14s} "
          f"{'hankel 100x50x64x64':>20s}")
    for name, tg, tw, th, *_ in rows:
        print(f"{name:8s} {tg * 1e3:13.2f} ms {tw * 1e3:11.2f} ms "
              f"{th * 1e3:17.2f} ms")

    if len(rows) == 2:
        vals = np.array([r[4:] for r in rows])
        assert np.allclose(vals[0], vals[1], rtol=0, atol=1e-12), \
            "backends disagree"
        print("results agree within 1e-12")


if __name__ == "__main__":
    main()
