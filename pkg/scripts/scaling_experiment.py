#!/usr/bin/env python3
"""Work-scaling experiment: fixed run count, growing length.

Generates run-structured strings whose run count stays near a target while n
doubles, then reports instrumented work for the break-point square scan and
the exhaustive oracle side by side.  With the run count fixed, the fast path
should roughly double per doubling of n while the oracle roughly quadruples.

Usage: python3 scripts/scaling_experiment.py [--target-m 200] [--seed 11]
                                             [--sizes 25000,50000,100000]
"""

import argparse
import sys
import time

from abelian_rle import bench, encode
from abelian_rle.bench import run_instrumented


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--target-m", type=int, default=200)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--sizes", default="25000,50000,100000")
    ap.add_argument("--skip-naive", action="store_true")
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print("algo,n,m,seed,wall_ns,window_jumps,parikh_entry_ops")
    prev = {}
    for n in sizes:
        text = bench.gen("runs", n, args.seed, sigma=2,
                         mean_run_len=n / args.target_m)
        m = encode(text)[0].m
        jobs = [("squares", {})]
        if not args.skip_naive:
            jobs.append(("naive_squares", {"engine": "recount"}))
        for algo, kw in jobs:
            t0 = time.perf_counter_ns()
            _res, c = run_instrumented(algo, text, **kw)
            wall = time.perf_counter_ns() - t0
            print(f"{algo},{n},{m},{args.seed},{wall},"
                  f"{c.window_jumps},{c.parikh_entry_ops}")
            if algo in prev:
                ratio = c.parikh_entry_ops / prev[algo]
                print(f"# {algo}: ops ratio vs previous size = {ratio:.3f}",
                      file=sys.stderr)
            prev[algo] = c.parikh_entry_ops
    return 0


if __name__ == "__main__":
    sys.exit(main())
