"""Longest common Abelian factors of two strings via paired window segments.

One window of length d slides over each string.  A segment is a maximal range
of alignments over which both boundary characters of that window stay fixed
(it ends where the window start or the first entering position crosses a run
boundary).  Within a segment pair, sliding the first window by x and the
second by y changes at most four character counts, each linearly, so the
alignments (x, y) realising a common Abelian factor form the solution set of
a tiny linear system: empty, a single point, an axis-parallel line, a
diagonal x - y = c, an antidiagonal x + y = c, or the full grid.  Each
nonempty solution set is emitted as one constant-size match record.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rle import RleString, _fill_range_counts


@dataclass(frozen=True)
class Constraint:
    """Solution shape over window offsets 0 <= x <= x_max, 0 <= y <= y_max."""

    kind: str  # all | point | diff_line | sum_line | fixed_x_free_y | fixed_y_free_x
    c: int | None = None   # diff_line: x - y = c; sum_line: x + y = c
    x0: int | None = None
    y0: int | None = None


@dataclass(frozen=True)
class LcafMatch:
    """All common-factor alignments found in one window-segment pair.

    Every (x, y) inside the box that satisfies the constraint yields
    Abelian-equivalent substrings w1[i+x..i+x+d-1] and w2[k+y..k+y+d-1].
    """

    i: int
    k: int
    d: int
    x_max: int
    y_max: int
    constraint: Constraint


@dataclass(frozen=True)
class LcafScanState:
    """Debug snapshot of one segment-pair evaluation."""

    i: int
    k: int
    d: int
    x_max: int
    y_max: int
    nonzero: tuple[int, ...]


def _segments(rle: RleString, d: int) -> list[tuple[int, int, int, int | None]]:
    """Maximal constant-boundary segments (start, extent, left char, entering char).

    The entering char is None only for the degenerate single-alignment segment
    of a window flush with the end of the string (extent 0, window immobile).
    """
    n = rle.n
    last = n - d + 1
    if last == 1:
        return [(1, 0, rle.char_ids[1], None)]
    succ_t = rle.succ_table
    ids = rle.char_ids
    segs: list[tuple[int, int, int, int | None]] = []
    i = 1
    while i < last:
        d1 = succ_t[i] - i
        d2 = succ_t[i + d] - (i + d)
        bp = i + (d1 if d1 < d2 else d2)
        eff = bp if bp < last else last
        segs.append((i, eff - i, ids[i], ids[i + d]))
        i = eff
    return segs


_EMPTY = ("empty",)
_FREE = ("free",)


def _fold(state: tuple, u: int, v: int, a: int) -> tuple:
    """Intersect ``state`` with the equation u*x - v*y = -a (u, v in {-1,0,1})."""
    if u == 0 and v == 0:
        return state if a == 0 else _EMPTY
    if v == 0:
        prim = ("x", -a * u)
    elif u == 0:
        prim = ("y", a * v)
    elif u == v:
        prim = ("diff", -a * u)
    else:
        prim = ("sum", -a * u)
    if state is _EMPTY:
        return _EMPTY
    if state is _FREE:
        return prim
    skind = state[0]
    pkind = prim[0]
    if skind == "pt":
        x0, y0 = state[1], state[2]
    else:
        if skind == pkind:
            return state if state[1] == prim[1] else _EMPTY
        a_k, a_v = state
        b_k, b_v = prim
        if a_k > b_k:  # canonicalise pair order: diff < sum < x < y
            a_k, b_k = b_k, a_k
            a_v, b_v = b_v, a_v
        if (a_k, b_k) == ("x", "y"):
            return ("pt", a_v, b_v)
        if (a_k, b_k) == ("diff", "x"):
            return ("pt", b_v, b_v - a_v)
        if (a_k, b_k) == ("diff", "y"):
            return ("pt", a_v + b_v, b_v)
        if (a_k, b_k) == ("sum", "x"):
            return ("pt", b_v, a_v - b_v)
        if (a_k, b_k) == ("sum", "y"):
            return ("pt", a_v - b_v, b_v)
        # diff + sum: x = (diff + sum) / 2 must be integral
        tot = a_v + b_v
        if tot & 1:
            return _EMPTY
        return ("pt", tot >> 1, (b_v - a_v) >> 1)
    # point against anything: substitute and test
    ok = {
        "x": lambda: x0 == prim[1],
        "y": lambda: y0 == prim[1],
        "diff": lambda: x0 - y0 == prim[1],
        "sum": lambda: x0 + y0 == prim[1],
    }[pkind]()
    return state if ok else _EMPTY


def _solve_pair(dvec: list[int], nonzero: set[int], i: int, k: int, d: int,
                xm: int, ym: int, cpl: int, cpr: int | None,
                cql: int, cqr: int | None) -> LcafMatch | None:
    chars = {cpl, cql}
    if cpr is not None:
        chars.add(cpr)
    if cqr is not None:
        chars.add(cqr)
    # characters outside the boundary set cannot change during either slide
    for c in nonzero:
        if c not in chars:
            return None
    state: tuple = _FREE
    for c in chars:
        u = 0 if cpr is None else (c == cpr) - (c == cpl)
        v = 0 if cqr is None else (c == cqr) - (c == cql)
        state = _fold(state, u, v, dvec[c])
        if state is _EMPTY:
            return None
    kind = state[0]
    if kind == "free":
        con = Constraint("all")
    elif kind == "x":
        x0 = state[1]
        if not 0 <= x0 <= xm:
            return None
        con = Constraint("fixed_x_free_y", x0=x0)
    elif kind == "y":
        y0 = state[1]
        if not 0 <= y0 <= ym:
            return None
        con = Constraint("fixed_y_free_x", y0=y0)
    elif kind == "diff":
        c0 = state[1]
        if max(0, c0) > min(xm, ym + c0):
            return None
        con = Constraint("diff_line", c=c0)
    elif kind == "sum":
        c0 = state[1]
        if max(0, c0 - ym) > min(xm, c0):
            return None
        con = Constraint("sum_line", c=c0)
    else:  # point
        x0, y0 = state[1], state[2]
        if not (0 <= x0 <= xm and 0 <= y0 <= ym):
            return None
        con = Constraint("point", x0=x0, y0=y0)
    return LcafMatch(i, k, d, xm, ym, con)


def common_factors_of_length(rle1: RleString, rle2: RleString, d: int,
                             counters=None, trace: list | None = None,
                             _selfcheck: bool = False) -> list[LcafMatch]:
    """All common Abelian factor alignments of one window length ``d``."""
    n1, n2 = rle1.n, rle2.n
    if not 1 <= d <= min(n1, n2):
        raise ValueError(f"window length {d} out of range [1, {min(n1, n2)}]")
    if rle1.alphabet != rle2.alphabet:
        raise ValueError("both strings must share one alphabet map")
    sigma = rle1.alphabet.sigma
    segs_u = _segments(rle1, d)
    segs_v = _segments(rle2, d)

    pu = [0] * sigma
    _fill_range_counts(rle1, 1, d, pu)
    pv1 = [0] * sigma
    _fill_range_counts(rle2, 1, d, pv1)
    dvec = [pu[c] - pv1[c] for c in range(sigma)]
    nonzero = {c for c in range(sigma) if dvec[c]}

    cnt = counters is not None
    last_v = len(segs_v) - 1
    out: list[LcafMatch] = []
    for ui, (i, xm, cpl, cpr) in enumerate(segs_u):
        v_touched: set[int] = set()
        for ki, (k, ym, cql, cqr) in enumerate(segs_v):
            if cnt:
                counters.segment_pairs += 1
            if _selfcheck:
                fu = [0] * sigma
                fv = [0] * sigma
                _fill_range_counts(rle1, i, i + d - 1, fu)
                _fill_range_counts(rle2, k, k + d - 1, fv)
                fresh = [fu[c] - fv[c] for c in range(sigma)]
                assert fresh == dvec, f"diff drift at segment pair ({i}, {k})"
            if trace is not None:
                trace.append(LcafScanState(i, k, d, xm, ym, tuple(sorted(nonzero))))
            if len(nonzero) <= 4:
                match = _solve_pair(dvec, nonzero, i, k, d, xm, ym, cpl, cpr, cql, cqr)
                if match is not None:
                    out.append(match)
            if ki < last_v and ym:
                dvec[cql] += ym
                dvec[cqr] -= ym
                v_touched.add(cql)
                v_touched.add(cqr)
                if dvec[cql]:
                    nonzero.add(cql)
                else:
                    nonzero.discard(cql)
                if dvec[cqr]:
                    nonzero.add(cqr)
                else:
                    nonzero.discard(cqr)
        # rewind the second window to position 1, touching only dirtied coords
        for c in v_touched:
            dvec[c] = pu[c] - pv1[c]
            if dvec[c]:
                nonzero.add(c)
            else:
                nonzero.discard(c)
        if ui < len(segs_u) - 1 and xm:
            pu[cpl] -= xm
            pu[cpr] += xm
            dvec[cpl] -= xm
            dvec[cpr] += xm
            for c in (cpl, cpr):
                if dvec[c]:
                    nonzero.add(c)
                else:
                    nonzero.discard(c)
    return out


def find_lcaf(rle1: RleString, rle2: RleString, all_lengths: bool = False,
              counters=None) -> tuple[int, list[LcafMatch]]:
    """Length of the longest common Abelian factors plus all their alignments.

    Scans window lengths downward and stops at the first length with a match;
    ``all_lengths`` scans every length and keeps the maximum instead (same
    result, never less work in the default mode).  A length of 0 means the
    strings share no character at all.
    """
    if rle1.n == 0 or rle2.n == 0:
        raise ValueError("both strings must be non-empty")
    top = min(rle1.n, rle2.n)
    if all_lengths:
        best: tuple[int, list[LcafMatch]] = (0, [])
        for d in range(1, top + 1):
            ms = common_factors_of_length(rle1, rle2, d, counters)
            if ms:
                best = (d, ms)
        return best
    for d in range(top, 0, -1):
        ms = common_factors_of_length(rle1, rle2, d, counters)
        if ms:
            return d, ms
    return 0, []


def expand_matches(matches: list[LcafMatch]) -> list[tuple[int, int]]:
    """All (position in w1, position in w2) pairs covered, deduplicated and sorted."""
    pairs: set[tuple[int, int]] = set()
    for m in matches:
        con = m.constraint
        i, k, xm, ym = m.i, m.k, m.x_max, m.y_max
        kind = con.kind
        if kind == "all":
            for x in range(xm + 1):
                for y in range(ym + 1):
                    pairs.add((i + x, k + y))
        elif kind == "point":
            pairs.add((i + con.x0, k + con.y0))
        elif kind == "fixed_x_free_y":
            for y in range(ym + 1):
                pairs.add((i + con.x0, k + y))
        elif kind == "fixed_y_free_x":
            for x in range(xm + 1):
                pairs.add((i + x, k + con.y0))
        elif kind == "diff_line":
            c = con.c
            for x in range(max(0, c), min(xm, ym + c) + 1):
                pairs.add((i + x, k + x - c))
        elif kind == "sum_line":
            c = con.c
            for x in range(max(0, c - ym), min(xm, c) + 1):
                pairs.add((i + x, k + c - x))
        else:
            raise ValueError(f"unknown constraint kind {kind!r}")
    return sorted(pairs)
