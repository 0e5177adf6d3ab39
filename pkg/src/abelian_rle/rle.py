"""Run-length encoding core shared by every algorithm in this package.

Positions are 1-based in all public interfaces; a text of length n has
positions 1..n.  The boundary set of a text consists of position 1, the start
of every maximal character run, and the last position n.  ``succ(i)`` is the
smallest boundary strictly greater than ``i``; once none remains it is the
sentinel ``n + 1``, so distance arithmetic never underflows.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable


@dataclass(frozen=True)
class AlphabetMap:
    """Dense character ids, assigned in sorted character order."""

    chars: tuple[str, ...]
    index_of: dict[str, int]

    @classmethod
    def from_texts(cls, *texts: str) -> "AlphabetMap":
        seen: set[str] = set()
        for t in texts:
            seen.update(t)
        chars = tuple(sorted(seen))
        return cls(chars, {c: i for i, c in enumerate(chars)})

    @property
    def sigma(self) -> int:
        return len(self.chars)


@dataclass(frozen=True, eq=False)
class RleString:
    """Run-length factorisation of a text plus position lookup tables.

    ``boundaries`` is the ascending boundary set described in the module
    docstring; ``succ_table[i]`` gives succ(i) for 1 <= i <= n (index 0 is
    unused).  ``starts`` and ``char_ids`` are derived conveniences: the start
    position of each factor, and the decoded character id at every position.
    """

    factors: tuple[tuple[int, int], ...]  # (char id, exponent), adjacent ids distinct
    n: int
    boundaries: tuple[int, ...]
    succ_table: list[int]
    starts: tuple[int, ...]
    char_ids: list[int]
    alphabet: AlphabetMap

    @property
    def m(self) -> int:
        return len(self.factors)


def _build(factors: tuple[tuple[int, int], ...], alphabet: AlphabetMap) -> RleString:
    starts = []
    pos = 1
    for _cid, exp in factors:
        if exp < 1:
            raise ValueError("run exponents must be positive")
        starts.append(pos)
        pos += exp
    n = pos - 1
    bound = tuple(sorted({1, *starts, n})) if n else ()

    succ_table = [n + 1] * (n + 1)
    prev = 1
    for b in bound:
        if b > prev:
            succ_table[prev:b] = [b] * (b - prev)
        prev = b
    # positions from the last boundary (i.e. n) keep the sentinel n + 1

    char_ids = [-1] * (n + 1)
    pos = 1
    for cid, exp in factors:
        char_ids[pos:pos + exp] = [cid] * exp
        pos += exp

    return RleString(factors, n, bound, succ_table, tuple(starts), char_ids, alphabet)


def encode(text: str, alphabet: AlphabetMap | None = None) -> tuple[RleString, AlphabetMap]:
    """Factorise ``text`` into maximal character runs.

    A shared ``alphabet`` may be supplied so several texts use one id space
    (required for two-string problems); it must cover every character.
    """
    if alphabet is None:
        alphabet = AlphabetMap.from_texts(text)
    idx = alphabet.index_of
    try:
        factors = tuple((idx[ch], sum(1 for _ in g)) for ch, g in groupby(text))
    except KeyError as exc:
        raise ValueError(f"character {exc.args[0]!r} missing from alphabet map") from exc
    return _build(factors, alphabet), alphabet


def from_factors(pairs: Iterable[tuple[str, int]],
                 alphabet: AlphabetMap | None = None) -> tuple[RleString, AlphabetMap]:
    """Build directly from (char, exponent) pairs, merging adjacent equal chars."""
    merged: list[tuple[str, int]] = []
    for ch, exp in pairs:
        if len(ch) != 1:
            raise ValueError(f"run character must be a single character, got {ch!r}")
        if exp < 1:
            raise ValueError(f"run exponent must be a positive integer, got {exp}")
        if merged and merged[-1][0] == ch:
            merged[-1] = (ch, merged[-1][1] + exp)
        else:
            merged.append((ch, exp))
    if alphabet is None:
        alphabet = AlphabetMap.from_texts("".join(ch for ch, _ in merged))
    idx = alphabet.index_of
    factors = tuple((idx[ch], exp) for ch, exp in merged)
    return _build(factors, alphabet), alphabet


def decode(rle: RleString) -> str:
    chars = rle.alphabet.chars
    return "".join(chars[cid] * exp for cid, exp in rle.factors)


def succ(rle: RleString, i: int) -> int:
    """Smallest boundary strictly greater than position ``i`` (n + 1 if none)."""
    if not 1 <= i <= rle.n:
        raise ValueError(f"position {i} out of range [1, {rle.n}]")
    return rle.succ_table[i]


def _fill_range_counts(rle: RleString, i: int, j: int, counts: list[int]) -> int:
    """Add occurrence counts of w[i..j] into ``counts``; returns factors touched."""
    if j < i:
        return 0
    f = bisect_right(rle.starts, i) - 1
    factors = rle.factors
    fstart = rle.starts[f]
    touched = 0
    while True:
        cid, exp = factors[f]
        fend = fstart + exp - 1
        lo = i if i > fstart else fstart
        hi = j if j < fend else fend
        counts[cid] += hi - lo + 1
        touched += 1
        if fend >= j:
            return touched
        f += 1
        fstart = fend + 1


@dataclass(eq=False)
class ParikhVector:
    """Per-character occurrence counts over a dense alphabet."""

    counts: list[int]

    @classmethod
    def zeros(cls, sigma: int) -> "ParikhVector":
        return cls([0] * sigma)

    @classmethod
    def of_range(cls, rle: RleString, i: int, j: int) -> "ParikhVector":
        return parikh_of_range(rle, i, j)

    def __eq__(self, other: object):
        if isinstance(other, ParikhVector):
            return self.counts == other.counts
        return NotImplemented

    __hash__ = None  # mutable

    def length(self) -> int:
        return sum(self.counts)

    def sub_of(self, other: "ParikhVector") -> bool:
        """Coordinatewise <=, i.e. this is a sub-permutation of ``other``."""
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def copy(self) -> "ParikhVector":
        return ParikhVector(self.counts[:])


def parikh_of_range(rle: RleString, i: int, j: int) -> ParikhVector:
    """Occurrence counts of w[i..j]; ``i == j + 1`` yields the empty vector."""
    if not (1 <= i <= j + 1 and j <= rle.n):
        raise ValueError(f"range ({i}, {j}) out of bounds for length {rle.n}")
    counts = [0] * rle.alphabet.sigma
    _fill_range_counts(rle, i, j, counts)
    return ParikhVector(counts)


class DiffTracker:
    """Two Parikh vectors with an incrementally maintained mismatch summary.

    Single-owner mutable: every update touches O(1) coordinates and keeps
    ``mismatch_count`` equal to the number of coordinates where the vectors
    differ.  Mismatch identities are only meaningful to callers while the
    count is at most 4 (no dispatch ever needs more); they happen to be kept
    exact at all counts here.
    """

    __slots__ = ("left", "right", "_mismatched", "mismatch_count")

    def __init__(self, left: ParikhVector, right: ParikhVector):
        if len(left.counts) != len(right.counts):
            raise ValueError("vectors must share one alphabet map")
        self.left = left
        self.right = right
        self._mismatched = {c for c, (a, b) in enumerate(zip(left.counts, right.counts))
                            if a != b}
        self.mismatch_count = len(self._mismatched)

    def mismatches(self) -> set[int]:
        return set(self._mismatched)

    def _resync(self, c: int) -> None:
        if self.left.counts[c] != self.right.counts[c]:
            self._mismatched.add(c)
        else:
            self._mismatched.discard(c)
        self.mismatch_count = len(self._mismatched)

    def add_left(self, c: int, delta: int = 1) -> None:
        self.left.counts[c] += delta
        self._resync(c)

    def add_right(self, c: int, delta: int = 1) -> None:
        self.right.counts[c] += delta
        self._resync(c)

    def shift_left(self, out_id: int, in_id: int, delta: int = 1) -> None:
        """Slide the left vector's window: drop ``delta`` of out, gain of in."""
        self.left.counts[out_id] -= delta
        self.left.counts[in_id] += delta
        self._resync(out_id)
        if in_id != out_id:
            self._resync(in_id)

    def shift_right(self, out_id: int, in_id: int, delta: int = 1) -> None:
        self.right.counts[out_id] -= delta
        self.right.counts[in_id] += delta
        self._resync(out_id)
        if in_id != out_id:
            self._resync(in_id)

    def shift_windows(self, c1: int, c2: int, c3: int, delta: int = 1) -> None:
        """Adjacent-window jump: left drops c1 and gains c2, right drops c2 and gains c3."""
        lc = self.left.counts
        rc = self.right.counts
        lc[c1] -= delta
        lc[c2] += delta
        rc[c2] -= delta
        rc[c3] += delta
        self._resync(c1)
        if c2 != c1:
            self._resync(c2)
        if c3 != c1 and c3 != c2:
            self._resync(c3)
