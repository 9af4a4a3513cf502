#!/usr/bin/env python3
"""Time the compiled stepping kernel against the numpy fallback.

Runs the bundled configuration (learning off) over a sweep of horizons on
every available backend and reports wall time per simulated step plus the
worst cross-backend estimate deviation.

Usage: python benchmarks/bench_backends.py [--horizons 1 2 4]
"""

import argparse
import time

import numpy as np

import det_observer as do
from det_observer import _backend


def run_once(backend, t_final):
    cfg = do.load_config(do.bundled_config_path("paper"),
                         {"learning": False, "backend": backend,
                          "plant.t_final": t_final,
                          "report.window": [0.0, t_final]})
    t0 = time.perf_counter()
    trace, _ = do.run(cfg)
    return time.perf_counter() - t0, trace


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--horizons", nargs="+", type=float,
                    default=[1.0, 2.0, 4.0],
                    help="simulated time units per benchmark run")
    args = ap.parse_args()

    backends = sorted(_backend.BACKENDS)
    print(f"available backends: {backends}")
    print(f"{'t_final':>8} {'backend':>9} {'wall s':>8} {'us/step':>8}")
    for t_final in args.horizons:
        traces = {}
        for name in backends:
            wall, trace = run_once(name, t_final)
            traces[name] = trace
            steps = len(trace.t) - 1
            print(f"{t_final:>8.1f} {name:>9} {wall:>8.3f} "
                  f"{1e6 * wall / steps:>8.1f}")
        if len(traces) == 2:
            dev = float(np.max(np.abs(traces["python"].xhat
                                      - traces["compiled"].xhat)))
            print(f"{'':>8} max estimate deviation between backends: "
                  f"{dev:.3g}")
    if len(backends) < 2:
        print("compiled kernel unavailable; only the numpy fallback ran")


if __name__ == "__main__":
    main()
