#!/usr/bin/env python3
"""Round-trip demonstration: draw random edge lengths, compute their
per-edge coordinate with the forward map, then recover the metric by
energy maximization and report the reconstruction error.

Usage: python3 scripts/round_trip_demo.py [triangulation.json] [trials]
Defaults to the 3-holed-sphere complex in scripts/data/pants.json.
"""

import json
import pathlib
import sys
import time

import numpy as np

from hexmetric import solver, surface

HERE = pathlib.Path(__file__).parent


def main() -> int:
    path = sys.argv[1] if len(sys.argv) > 1 else str(HERE / "data" / "pants.json")
    trials = int(sys.argv[2]) if len(sys.argv) > 2 else 20
    with open(path) as fh:
        cx = surface.build(json.load(fh))
    print(
        f"complex: {cx.n} hexagons, {cx.num_edges} edges, "
        f"chi={cx.euler_characteristic()}, "
        f"{len(cx.boundary_components())} boundary components"
    )
    rng = np.random.default_rng(0)
    worst = 0.0
    start = time.perf_counter()
    for k in range(trials):
        lengths = rng.uniform(0.3, 3.0, cx.num_edges)
        z, bl, _ = solver.forward_map(cx, lengths)
        t, rep = solver.maximize(cx, z)
        metric = solver.extract_metric(cx, t)
        err = float(np.max(np.abs(metric.edge_lengths - lengths)))
        worst = max(worst, err)
        print(
            f"trial {k:3d}: {rep.iterations:2d} Newton steps, "
            f"grad {rep.grad_norm:.1e}, length error {err:.2e}"
        )
    elapsed = time.perf_counter() - start
    print(f"\nworst reconstruction error over {trials} trials: {worst:.3e}")
    print(f"total time: {elapsed:.2f}s")
    return 0 if worst < 1e-8 else 1


if __name__ == "__main__":
    sys.exit(main())
