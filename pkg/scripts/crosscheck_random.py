#!/usr/bin/env python3
"""Randomised cross-check of every fast path against its brute-force oracle.

Exits non-zero on the first disagreement, printing a reproduction recipe.

Usage: python3 scripts/crosscheck_random.py [--trials 500] [--seed 0]
                                            [--max-n 128]
"""

import argparse
import random
import sys

from abelian_rle import (AlphabetMap, bench, encode, expand_matches,
                         find_all_squares, find_lcaf, find_regular_periods,
                         naive_lcaf, naive_periods, naive_squares)


def random_text(rng: random.Random, max_n: int) -> str:
    kind = rng.choice(["unary", "random", "runs"])
    return bench.gen(kind, rng.randint(1, max_n), rng.randint(0, 1 << 30),
                     sigma=rng.randint(1, 4),
                     mean_run_len=rng.choice([2, 4, 8, 16]))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=128)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for trial in range(args.trials):
        s = random_text(rng, args.max_n)
        r, _ = encode(s)
        if find_all_squares(r) != naive_squares(s):
            print(f"squares mismatch on {s!r} (trial {trial})")
            return 1
        if find_regular_periods(r) != naive_periods(s):
            print(f"periods mismatch on {s!r} (trial {trial})")
            return 1
        t = random_text(rng, args.max_n)
        amap = AlphabetMap.from_texts(s, t)
        l, matches = find_lcaf(encode(s, amap)[0], encode(t, amap)[0])
        if (l, expand_matches(matches)) != naive_lcaf(s, t):
            print(f"lcaf mismatch on {s!r} / {t!r} (trial {trial})")
            return 1
    print(f"{args.trials} trials, all three algorithms agree with their oracles")
    return 0


if __name__ == "__main__":
    sys.exit(main())
