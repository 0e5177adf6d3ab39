"""Regular Abelian periods of one string via a run-boundary-aware block scan.

A string has regular Abelian period (p, t) when its complete length-p blocks
are pairwise Abelian equivalent and the length-t tail (t = n mod p, possibly
empty) is a sub-permutation of the first block.  Checking one block length
costs work proportional to the number of runs, not to n: a complete block
falling inside a single run settles the answer immediately for non-unary
texts, and otherwise every block overlaps at least two runs, so walking run
fragments over all blocks touches each run a bounded number of times.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rle import RleString


@dataclass(frozen=True)
class RegularPeriod:
    p: int
    t: int


@dataclass(frozen=True)
class BlockDecomposition:
    """Tiling of positions 1..n into complete length-p blocks plus a tail."""

    p: int
    complete_blocks: int
    tail_start: int


def decompose(n: int, p: int) -> BlockDecomposition:
    if p < 1:
        raise ValueError("block length must be positive")
    return BlockDecomposition(p, n // p, n - (n % p) + 1)


def is_regular_period(rle: RleString, d: int, counters=None) -> tuple[bool, int]:
    """Decide whether (d, n mod d) is a regular Abelian period; returns (ok, t).

    Unary texts qualify for every d.  Otherwise a complete block whose start
    and end share the same next boundary lies inside one run, which rules the
    block length out without inspecting anything later.
    """
    n = rle.n
    if not 1 <= d <= n // 2:
        raise ValueError(f"block length {d} out of range [1, {n // 2}]")
    t = n % d
    if rle.m <= 1:
        return True, t
    succ_t = rle.succ_table
    factors = rle.factors
    sigma = rle.alphabet.sigma
    nblocks = n // d

    prev = [0] * sigma
    cur = [0] * sigma
    prev_touched: list[int] = []
    cur_touched: list[int] = []
    ops = 2 * sigma  # buffer allocation writes

    f = 0
    fstart = 1

    def fill(lo: int, hi: int, buf: list[int], touched: list[int]) -> int:
        # factors are consumed left to right; the pointer never rewinds
        nonlocal f, fstart
        filled = 0
        while fstart + factors[f][1] - 1 < lo:
            fstart += factors[f][1]
            f += 1
        g, gstart = f, fstart
        while True:
            cid, exp = factors[g]
            gend = gstart + exp - 1
            a = lo if lo > gstart else gstart
            b = hi if hi < gend else gend
            if buf[cid] == 0:
                touched.append(cid)
            buf[cid] += b - a + 1
            filled += 1
            if gend >= hi:
                return filled
            g += 1
            gstart = gend + 1

    ok = True
    for blk in range(1, nblocks + 1):
        lo = (blk - 1) * d + 1
        hi = blk * d
        ops += 1  # block inspection
        if succ_t[lo] == succ_t[hi]:
            ok = False  # block inside a single run of a non-unary text
            break
        for c in cur_touched:
            cur[c] = 0
        ops += len(cur_touched)
        cur_touched.clear()
        ops += fill(lo, hi, cur, cur_touched)
        if blk > 1:
            ops += len(cur_touched) + len(prev_touched)
            if (any(cur[c] != prev[c] for c in cur_touched)
                    or any(prev[c] != cur[c] for c in prev_touched)):
                ok = False
                break
        prev, cur = cur, prev
        prev_touched, cur_touched = cur_touched, prev_touched

    if ok and t:
        for c in cur_touched:
            cur[c] = 0
        ops += len(cur_touched)
        cur_touched.clear()
        ops += fill(n - t + 1, n, cur, cur_touched)
        ops += len(cur_touched)
        ok = all(cur[c] <= prev[c] for c in cur_touched)

    if counters is not None:
        counters.parikh_entry_ops += ops
    return ok, t


def find_regular_periods(rle: RleString, counters=None) -> list[RegularPeriod]:
    """All regular Abelian periods (d, n mod d) for d in [1, n // 2], ascending."""
    out = []
    for d in range(1, rle.n // 2 + 1):
        ok, t = is_regular_period(rle, d, counters)
        if ok:
            out.append(RegularPeriod(d, t))
    return out
