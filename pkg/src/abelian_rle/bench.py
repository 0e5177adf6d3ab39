"""Synthetic input generators and instrumented work counters.

Counters are injected: every algorithm accepts an optional ``counters``
object and pays only a None-check when instrumentation is off.  Accounting
conventions: ``window_jumps`` counts break-point jumps of the twin-window
square scan; ``segment_pairs`` counts (first-string segment, second-string
segment) evaluations of the common-factor scan; ``parikh_entry_ops`` counts
count-array element reads/writes at whatever granularity the executing code
actually touches them (the vectorised oracle engine counts array elements).
"""

from __future__ import annotations

import math
import random
import string
from dataclasses import dataclass

from . import lcaf, oracles, periods, rle, squares

_LETTERS = string.ascii_lowercase


@dataclass
class WorkCounters:
    window_jumps: int = 0
    segment_pairs: int = 0
    parikh_entry_ops: int = 0

    def reset(self) -> None:
        self.window_jumps = 0
        self.segment_pairs = 0
        self.parikh_entry_ops = 0


def gen(kind: str, n: int, seed: int, sigma: int = 2, mean_run_len: float = 1.0) -> str:
    """Deterministic synthetic text: ``unary``, ``random`` or ``runs``.

    ``runs`` draws geometric run lengths with the given mean, so the number
    of runs lands near n / mean_run_len; ``random`` picks characters
    uniformly; sigma = 1 forces a unary string either way.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    if not 1 <= sigma <= len(_LETTERS):
        raise ValueError(f"alphabet size must be in [1, {len(_LETTERS)}]")
    if mean_run_len < 1:
        raise ValueError("mean run length must be at least 1")
    if kind == "unary" or sigma == 1:
        return "a" * n
    rng = random.Random(seed)
    letters = _LETTERS[:sigma]
    if kind == "random":
        return "".join(rng.choices(letters, k=n))
    if kind == "runs":
        p = 1.0 / mean_run_len
        pieces: list[str] = []
        total = 0
        prev = -1
        while total < n:
            if prev < 0:
                c = rng.randrange(sigma)
            else:
                c = rng.randrange(sigma - 1)
                if c >= prev:
                    c += 1
            if p >= 1.0:
                run = 1
            else:
                run = 1 + int(math.log(1.0 - rng.random()) / math.log(1.0 - p))
            run = min(run, n - total)
            pieces.append(letters[c] * run)
            total += run
            prev = c
        return "".join(pieces)
    raise ValueError(f"unknown generator kind {kind!r}")


_ALGORITHMS = {
    "squares": lambda texts, counters, kw: squares.find_all_squares(
        _as_rle(texts[0]), counters=counters, **kw),
    "periods": lambda texts, counters, kw: periods.find_regular_periods(
        _as_rle(texts[0]), counters=counters, **kw),
    "lcaf": lambda texts, counters, kw: lcaf.find_lcaf(
        *_as_rle_pair(texts[0], texts[1]), counters=counters, **kw),
    "naive_squares": lambda texts, counters, kw: oracles.naive_squares(
        _as_text(texts[0]), counters=counters, **kw),
}


def _as_rle(obj) -> rle.RleString:
    if isinstance(obj, rle.RleString):
        return obj
    return rle.encode(obj)[0]


def _as_text(obj) -> str:
    if isinstance(obj, rle.RleString):
        return rle.decode(obj)
    return obj


def _as_rle_pair(a, b) -> tuple[rle.RleString, rle.RleString]:
    t1, t2 = _as_text(a), _as_text(b)
    amap = rle.AlphabetMap.from_texts(t1, t2)
    return rle.encode(t1, amap)[0], rle.encode(t2, amap)[0]


def run_instrumented(algorithm: str, *inputs, **params) -> tuple[object, WorkCounters]:
    """Run one algorithm with fresh counters; the result matches the plain call."""
    try:
        fn = _ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; "
                         f"one of {sorted(_ALGORITHMS)}") from None
    counters = WorkCounters()
    result = fn(inputs, counters, params)
    return result, counters
