"""All Abelian squares of one string by break-point jumping of twin windows.

For a half length d the scan keeps two adjacent length-d windows aligned at
position i and the mismatch summary of their Parikh vectors.  The next break
point is the nearest position at which one of the three active edges (window
start, window midpoint, first entering character) crosses a run boundary;
between two break points each window gains and loses copies of a single
character, so all square starts strictly inside the gap follow from O(1)
arithmetic on at most three coordinates, and the windows jump in one step.
Start positions are reported as maximal runs of consecutive squares.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rle import RleString, _fill_range_counts


@dataclass(frozen=True)
class SquareRun:
    """Maximal run of square start positions first_start..last_start at one half length."""

    first_start: int
    last_start: int
    half_len: int


@dataclass(frozen=True)
class SquareScanState:
    """Debug snapshot of one visited alignment (d1..d3 are 0 at the final one)."""

    i: int
    d1: int
    d2: int
    d3: int
    mismatch_count: int


def find_squares_of_length(rle: RleString, d: int, counters=None,
                           trace: list | None = None,
                           _selfcheck: bool = False) -> list[SquareRun]:
    """Maximal runs of Abelian-square start positions of half length ``d``."""
    n = rle.n
    if not 1 <= d <= n // 2:
        raise ValueError(f"half length {d} out of range [1, {n // 2}]")
    sigma = rle.alphabet.sigma
    left = [0] * sigma
    right = [0] * sigma
    ops = _fill_range_counts(rle, 1, d, left)
    ops += _fill_range_counts(rle, d + 1, 2 * d, right)
    mmset = {c for c in range(sigma) if left[c] != right[c]}
    mm = len(mmset)
    if counters is not None:
        counters.parikh_entry_ops += ops + 3 * sigma

    ids = rle.char_ids
    succ_t = rle.succ_table
    last = n - 2 * d + 1
    cnt = counters is not None

    out: list[SquareRun] = []
    run_a = run_b = 0  # open run of reported starts; 0 = none yet

    def report(a: int, b: int) -> None:
        nonlocal run_a, run_b
        if run_b and a <= run_b + 1:
            if b > run_b:
                run_b = b
        else:
            if run_b:
                out.append(SquareRun(run_a, run_b, d))
            run_a, run_b = a, b

    i = 1
    while True:
        if mm == 0:
            report(i, i)
        if i >= last:
            if trace is not None:
                trace.append(SquareScanState(i, 0, 0, 0, mm))
            break
        i2 = i + d
        i3 = i + 2 * d
        c1 = ids[i]
        c2 = ids[i2]
        c3 = ids[i3]
        d1 = succ_t[i] - i
        d2 = succ_t[i2] - i2
        d3 = succ_t[i3] - i3
        z = d1 if d1 < d2 else d2
        if d3 < z:
            z = d3
        if i + z > last:
            z = last - i
        if trace is not None:
            trace.append(SquareScanState(i, d1, d2, d3, mm))

        # square starts strictly inside (i, i + z]
        if mm == 0:
            if c1 == c2 == c3:
                report(i + 1, i + z)
        elif mm == 2:
            it = iter(mmset)
            p = next(it)
            q = next(it)
            if left[p] < right[p]:
                p, q = q, p
            # both mismatched coordinates must be among the changing characters
            if (p == c1 or p == c2 or p == c3) and (q == c1 or q == c2 or q == c3):
                x = left[p] - right[p]
                zz = 0
                if c2 == q:
                    if c1 == p:
                        if c3 == q:
                            zz = x
                        elif c3 == p:
                            zz = x >> 1 if x & 1 == 0 else 0  # odd excess: no integer start
                    elif c1 == q and c3 == p:
                        zz = x
                if 0 < zz <= z:
                    report(i + zz, i + zz)
        elif mm == 3:
            if (c1 != c2 and c1 != c3 and c2 != c3
                    and c1 in mmset and c2 in mmset and c3 in mmset):
                x = left[c1] - right[c1]
                if (0 < x <= z and left[c3] - right[c3] == x
                        and right[c2] - left[c2] == 2 * x):
                    report(i + x, i + x)
        # mm == 1 cannot occur (windows have equal length); mm >= 4 admits nothing

        left[c1] -= z
        left[c2] += z
        right[c2] -= z
        right[c3] += z
        if left[c1] != right[c1]:
            mmset.add(c1)
        else:
            mmset.discard(c1)
        if c2 != c1:
            if left[c2] != right[c2]:
                mmset.add(c2)
            else:
                mmset.discard(c2)
        if c3 != c1 and c3 != c2:
            if left[c3] != right[c3]:
                mmset.add(c3)
            else:
                mmset.discard(c3)
        mm = len(mmset)
        if cnt:
            counters.window_jumps += 1
            counters.parikh_entry_ops += 8
        i += z

        if _selfcheck:
            fl = [0] * sigma
            fr = [0] * sigma
            _fill_range_counts(rle, i, i + d - 1, fl)
            _fill_range_counts(rle, i + d, i + 2 * d - 1, fr)
            assert fl == left and fr == right, f"tracker drift at alignment {i}"
            assert mm == sum(1 for c in range(sigma) if fl[c] != fr[c])

    if run_b:
        out.append(SquareRun(run_a, run_b, d))
    return out


def find_all_squares(rle: RleString, counters=None,
                     d_min: int = 1, d_max: int | None = None) -> list[SquareRun]:
    """All Abelian squares for every half length, sorted by (half length, start)."""
    top = rle.n // 2
    if d_max is None:
        d_max = top
    if d_min < 1 or d_max > top:
        raise ValueError(f"half-length range [{d_min}, {d_max}] outside [1, {top}]")
    out: list[SquareRun] = []
    for d in range(d_min, d_max + 1):
        out.extend(find_squares_of_length(rle, d, counters))
    return out
