#!/usr/bin/env python3
"""Print the per-alignment trace of the square scan for one text and one d.

Shows every visited alignment with its edge-to-boundary distances and the
number of mismatched Parikh coordinates, followed by the reported runs.

Usage: python3 scripts/trace_squares.py TEXT D
       python3 scripts/trace_squares.py --rle "a:12 b:4 a:3" D
"""

import argparse
import sys

from abelian_rle import encode, find_squares_of_length, from_factors


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("text")
    ap.add_argument("d", type=int)
    ap.add_argument("--rle", action="store_true",
                    help="text is whitespace-separated char:exponent tokens")
    args = ap.parse_args()
    if args.rle:
        pairs = []
        for tok in args.text.split():
            ch, _, exp = tok.rpartition(":")
            pairs.append((ch, int(exp)))
        r, _ = from_factors(pairs)
    else:
        r, _ = encode(args.text)
    trace = []
    runs = find_squares_of_length(r, args.d, trace=trace)
    print(f"n={r.n} m={r.m} d={args.d}")
    for s in trace:
        print(f"  i={s.i:<6} d1={s.d1:<5} d2={s.d2:<5} d3={s.d3:<5} "
              f"diff={s.mismatch_count}")
    for run in runs:
        print(f"run <{run.first_start}, {run.last_start}, {run.half_len}>")
    return 0


if __name__ == "__main__":
    sys.exit(main())
