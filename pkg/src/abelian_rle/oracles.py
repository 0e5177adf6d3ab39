"""Brute-force reference implementations used as ground truth in tests.

Everything here works on plain decoded text with its own character indexing,
deliberately sharing no run-boundary machinery with the fast paths: a bug in
the compressed representation cannot mask itself.  Outputs use the same
record types and run merging as the fast paths so results diff cleanly.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .lcaf import LcafMatch  # noqa: F401  (re-exported for type parity in tests)
from .periods import RegularPeriod
from .squares import SquareRun

# above this length the one-position-at-a-time scan moves to a vectorised
# per-position recount; both engines are exact and cross-checked in tests
_STEPWISE_LIMIT = 2048


def _char_indexing(*texts: str) -> dict[str, int]:
    chars = sorted(set().union(*map(set, texts)))
    return {c: i for i, c in enumerate(chars)}


def _starts_to_runs(starts: list[int], d: int) -> list[SquareRun]:
    runs: list[SquareRun] = []
    for s in starts:
        if runs and s == runs[-1].last_start + 1:
            runs[-1] = SquareRun(runs[-1].first_start, s, d)
        else:
            runs.append(SquareRun(s, s, d))
    return runs


def _squares_stepwise(text: str, counters) -> list[SquareRun]:
    # twin adjacent windows advanced one position at a time, O(1) per step
    n = len(text)
    idx = _char_indexing(text)
    ids = [0] + [idx[c] for c in text]  # 1-based
    sigma = len(idx)
    cnt = counters is not None
    out: list[SquareRun] = []
    for d in range(1, n // 2 + 1):
        left = [0] * sigma
        right = [0] * sigma
        for pos in range(1, d + 1):
            left[ids[pos]] += 1
            right[ids[pos + d]] += 1
        mm = sum(1 for c in range(sigma) if left[c] != right[c])
        if cnt:
            counters.parikh_entry_ops += 2 * d + sigma
        starts = []
        i = 1
        while True:
            if mm == 0:
                starts.append(i)
            if i + 2 * d > n:
                break
            c1 = ids[i]
            c2 = ids[i + d]
            c3 = ids[i + 2 * d]
            before = (
                (left[c1] != right[c1])
                + (c2 != c1 and left[c2] != right[c2])
                + (c3 != c1 and c3 != c2 and left[c3] != right[c3])
            )
            left[c1] -= 1
            left[c2] += 1
            right[c2] -= 1
            right[c3] += 1
            after = (
                (left[c1] != right[c1])
                + (c2 != c1 and left[c2] != right[c2])
                + (c3 != c1 and c3 != c2 and left[c3] != right[c3])
            )
            mm += after - before
            if cnt:
                counters.parikh_entry_ops += 8
            i += 1
        out.extend(_starts_to_runs(starts, d))
    return out


def _squares_recount(text: str, counters) -> list[SquareRun]:
    # per-position window recount via prefix sums, vectorised across positions
    n = len(text)
    idx = _char_indexing(text)
    sigma = len(idx)
    ids = np.fromiter((idx[c] for c in text), dtype=np.int32, count=n)
    prefix = np.zeros((sigma, n + 1), dtype=np.int64)
    for c in range(sigma):
        np.cumsum(ids == c, out=prefix[c, 1:])
    out: list[SquareRun] = []
    for d in range(1, n // 2 + 1):
        width = n - 2 * d + 1
        gap = prefix[:, :width] + prefix[:, 2 * d:] - 2 * prefix[:, d:width + d]
        ok = ~gap.any(axis=0)
        if counters is not None:
            counters.parikh_entry_ops += 2 * gap.size
        starts = np.flatnonzero(ok) + 1
        if len(starts):
            breaks = np.flatnonzero(np.diff(starts) > 1)
            first = np.concatenate(([0], breaks + 1))
            last = np.concatenate((breaks, [len(starts) - 1]))
            out.extend(SquareRun(int(starts[a]), int(starts[b]), d)
                       for a, b in zip(first, last))
    return out


def naive_squares(text: str, counters=None, engine: str = "auto") -> list[SquareRun]:
    """All Abelian squares by exhaustive scanning, as maximal runs per half length."""
    if engine == "auto":
        engine = "stepwise" if len(text) <= _STEPWISE_LIMIT else "recount"
    if engine == "stepwise":
        return _squares_stepwise(text, counters)
    if engine == "recount":
        return _squares_recount(text, counters)
    raise ValueError(f"unknown engine {engine!r}")


def naive_periods(text: str) -> list[RegularPeriod]:
    """Regular Abelian periods straight from the definition, one Counter per block."""
    n = len(text)
    out = []
    for d in range(1, n // 2 + 1):
        t = n % d
        first = Counter(text[:d])
        blocks_equal = all(Counter(text[lo:lo + d]) == first
                           for lo in range(d, n - t, d))
        if blocks_equal:
            tail = Counter(text[n - t:])
            if all(tail[c] <= first[c] for c in tail):
                out.append(RegularPeriod(d, t))
    return out


def naive_lcaf(text1: str, text2: str) -> tuple[int, list[tuple[int, int]]]:
    """Longest common Abelian factor length and all position pairs realising it.

    Groups the count vectors of every length-d window of both strings and
    returns the first (largest) d with a cross-string collision.
    """
    if not text1 or not text2:
        raise ValueError("both strings must be non-empty")
    idx = _char_indexing(text1, text2)
    sigma = len(idx)

    def window_groups(text: str, d: int) -> dict[tuple[int, ...], list[int]]:
        counts = [0] * sigma
        for c in text[:d]:
            counts[idx[c]] += 1
        groups: dict[tuple[int, ...], list[int]] = {}
        groups.setdefault(tuple(counts), []).append(1)
        for pos in range(1, len(text) - d + 1):
            counts[idx[text[pos - 1]]] -= 1
            counts[idx[text[pos + d - 1]]] += 1
            groups.setdefault(tuple(counts), []).append(pos + 1)
        return groups

    for d in range(min(len(text1), len(text2)), 0, -1):
        g1 = window_groups(text1, d)
        g2 = window_groups(text2, d)
        pairs = [(p1, p2)
                 for key, starts1 in g1.items() if key in g2
                 for p1 in starts1 for p2 in g2[key]]
        if pairs:
            return d, sorted(pairs)
    return 0, []
