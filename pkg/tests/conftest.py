"""Shared seeded corpora for oracle-equivalence and bound tests."""

import random

from abelian_rle import bench


def corpus_strings(count: int, max_n: int, seed: int) -> list[str]:
    """Deterministic mixed corpus: unary, uniform random and run-structured texts."""
    out = []
    for idx in range(count):
        rng = random.Random((seed << 20) + idx)
        n = rng.randint(1, max_n // 4) if rng.random() < 0.6 else rng.randint(1, max_n)
        kind = rng.choices(["unary", "random", "runs"], weights=[1, 5, 4])[0]
        sigma = rng.randint(1, 4)
        mean = rng.choice([2, 3, 5, 9, 17])
        out.append(bench.gen(kind, n, rng.randint(0, 10 ** 9),
                             sigma=sigma, mean_run_len=mean))
    return out


def corpus_pairs(count: int, max_n: int, seed: int) -> list[tuple[str, str]]:
    """Deterministic mixed string pairs, mostly over a shared alphabet."""
    out = []
    for idx in range(count):
        rng = random.Random((seed << 21) + idx)
        shared_sigma = rng.randint(1, 4)
        pair = []
        for _ in range(2):
            n = rng.randint(1, max_n // 4) if rng.random() < 0.5 else rng.randint(1, max_n)
            kind = rng.choices(["unary", "random", "runs"], weights=[1, 4, 5])[0]
            sigma = shared_sigma if rng.random() < 0.7 else rng.randint(1, 4)
            mean = rng.choice([2, 3, 5, 9, 17])
            pair.append(bench.gen(kind, n, rng.randint(0, 10 ** 9),
                                  sigma=sigma, mean_run_len=mean))
        out.append((pair[0], pair[1]))
    return out
