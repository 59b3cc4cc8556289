"""Compare the compiled and pure-NumPy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 50] [--json out.json]

Each kernel is run on identical inputs under every available backend; the
table reports the median wall time and checks that outputs agree.
"""
import argparse
import json
import statistics
import time

import numpy as np

from prsnet import _backend
from prsnet.boxer import descending_order, ilp_heuristic, prefix_table
from prsnet.density import KdeConfig, _binned, _kernel_tables, fit_grid, kde_grid_fft


def median_ms(fn, repeat):
    fn()
    ts = []
    for _ in range(repeat):
        t = time.perf_counter_ns()
        fn()
        ts.append(time.perf_counter_ns() - t)
    return statistics.median(ts) / 1e6


def cases(n_points, grid_n, alpha, seed):
    rng = np.random.default_rng(seed)
    pts = np.ascontiguousarray(np.vstack([rng.normal(-3, 1.5, (n_points // 2, 2)), rng.normal(3, 1.5, (n_points - n_points // 2, 2))]))
    cfg = KdeConfig(grid_n=grid_n)
    grid, h = fit_grid(pts, cfg)
    local = np.ascontiguousarray(grid.to_grid_frame(pts))
    b = _binned(pts, grid)
    ky, kx = _kernel_tables(grid, h)
    g = kde_grid_fft(pts, cfg)
    w = g.weights
    pre = prefix_table(w)
    order = np.ascontiguousarray(descending_order(w))
    target = alpha * w.sum()
    small = kde_grid_fft(pts, KdeConfig(grid_n=32)).weights
    pre_small = prefix_table(small)
    return {
        "bin_linear": lambda k: k.bin_linear(local, grid.origin[0], grid.origin[1], grid.cell_w, grid.cell_h, grid.n),
        "conv_direct": lambda k: k.conv_direct(b, ky, kx),
        "ilp_scan": lambda k: k.ilp_scan(pre, order, target),
        "optimal_scan(32)": lambda k: k.optimal_scan(pre_small, alpha * small.sum()),
        "kde+ilp end-to-end": lambda k: ilp_heuristic(kde_grid_fft(pts, cfg), alpha).box,
    }


def same(a, b):
    if isinstance(a, np.ndarray):
        return bool(np.allclose(a, b, rtol=1e-9, atol=1e-12))
    return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=2000)
    ap.add_argument("--grid", type=int, default=128)
    ap.add_argument("--alpha", type=float, default=0.9)
    ap.add_argument("--repeat", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json")
    args = ap.parse_args(argv)

    backends = _backend.available_backends()
    work = cases(args.points, args.grid, args.alpha, args.seed)
    rows = []
    saved = _backend.kernels
    try:
        for name, fn in work.items():
            times, outs = {}, {}
            for bname, mod in backends.items():
                _backend.kernels = mod
                outs[bname] = fn(mod)
                times[bname] = median_ms(lambda: fn(mod), args.repeat)
            vals = list(outs.values())
            rows.append({"kernel": name, "ms": times, "agree": all(same(vals[0], v) for v in vals[1:])})
    finally:
        _backend.kernels = saved

    names = list(backends)
    print(f"points={args.points} grid={args.grid} alpha={args.alpha} repeat={args.repeat} default={_backend.BACKEND}")
    print(f"{'kernel':<22}" + "".join(f"{b + ' ms':>14}" for b in names) + f"{'ratio':>10}{'agree':>8}")
    for r in rows:
        ms = [r["ms"][b] for b in names]
        ratio = ms[-1] / ms[0] if len(ms) > 1 and ms[0] > 0 else float("nan")
        print(f"{r['kernel']:<22}" + "".join(f"{m:>14.4f}" for m in ms) + f"{ratio:>10.2f}{str(r['agree']):>8}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"args": vars(args), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
