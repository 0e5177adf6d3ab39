import pytest
from hypothesis import given, settings, strategies as st

from abelian_rle import (SquareRun, encode, find_all_squares,
                         find_squares_of_length, from_factors, naive_squares)
from abelian_rle.bench import WorkCounters

from conftest import corpus_strings

WALK = [("a", 12), ("b", 4), ("a", 3), ("c", 2), ("d", 2), ("c", 2), ("a", 2)]


@pytest.fixture(scope="module")
def walk_rle():
    r, _ = from_factors(WALK)
    assert r.n == 27
    return r


def test_walkthrough_d4_output(walk_rle):
    assert find_squares_of_length(walk_rle, 4) == [
        SquareRun(1, 5, 4), SquareRun(11, 11, 4), SquareRun(19, 19, 4)]


def test_walkthrough_d4_trace(walk_rle):
    # visited alignments and their mismatch counts, recomputed from raw text
    trace = []
    find_squares_of_length(walk_rle, 4, trace=trace, _selfcheck=True)
    visited = [s.i for s in trace]
    assert visited == [1, 5, 9, 12, 13, 14, 16, 17, 18, 19, 20]
    assert [s.mismatch_count for s in trace] == [0, 0, 2, 2, 3, 3, 4, 3, 2, 0, 2]
    from abelian_rle import decode
    text = decode(walk_rle)
    d = 4
    for s in trace:
        lw = text[s.i - 1:s.i + d - 1]
        rw = text[s.i + d - 1:s.i + 2 * d - 1]
        fresh = sum(1 for c in set(text) if lw.count(c) != rw.count(c))
        assert s.mismatch_count == fresh, s
    by_i = {s.i: s for s in trace}
    # the two-coordinate surplus at alignment 9 resolves to the single start 11
    assert (by_i[9].d1, by_i[9].d2, by_i[9].d3) == (4, 4, 3)
    # equal windows at 5 but a different entering character: no starts in (5, 9]
    assert by_i[5].mismatch_count == 0


def test_unary_single_run_per_d():
    n = 17
    r, _ = encode("a" * n)
    for d in range(1, n // 2 + 1):
        assert find_squares_of_length(r, d) == [SquareRun(1, n - 2 * d + 1, d)]


def test_ab_has_no_squares():
    r, _ = encode("ab")
    assert find_all_squares(r) == []


def test_d_out_of_range():
    r, _ = encode("aaaa")
    for d in (0, 3):
        with pytest.raises(ValueError):
            find_squares_of_length(r, d)


def test_missing_lemma_pattern_regression():
    # diff=2 with boundary characters (q, q, p) still yields the start i+x
    r, _ = encode("babba")
    assert find_squares_of_length(r, 2) == [SquareRun(2, 2, 2)]


def test_all_squares_sorted_and_complete():
    r, _ = encode("abaababa")
    runs = find_all_squares(r)
    assert runs == sorted(runs, key=lambda x: (x.half_len, x.first_start))
    assert runs == naive_squares("abaababa")


def test_runs_are_maximal_and_disjoint():
    for s in corpus_strings(80, 96, 404):
        r, _ = encode(s)
        per_d: dict[int, list[SquareRun]] = {}
        for run in find_all_squares(r):
            per_d.setdefault(run.half_len, []).append(run)
        for d, runs in per_d.items():
            for a, b in zip(runs, runs[1:]):
                assert a.last_start + 1 < b.first_start, (s, d)
            for run in runs:
                assert run.first_start >= 1
                assert run.last_start + 2 * d - 1 <= r.n


@given(st.text(alphabet="abcd", min_size=2, max_size=40))
@settings(max_examples=200)
def test_matches_oracle(t):
    r, _ = encode(t)
    assert find_all_squares(r) == naive_squares(t)


def test_matches_oracle_on_corpus():
    for s in corpus_strings(150, 128, 405):
        r, _ = encode(s)
        assert find_all_squares(r) == naive_squares(s), s


def test_tracker_fidelity_selfcheck():
    for s in corpus_strings(60, 64, 406):
        r, _ = encode(s)
        for d in range(1, r.n // 2 + 1):
            find_squares_of_length(r, d, _selfcheck=True)


def test_jump_soundness_only_edge_characters_move():
    # between consecutive alignments each window edge stays inside one run
    for s in corpus_strings(60, 64, 407):
        r, _ = encode(s)
        for d in range(1, r.n // 2 + 1):
            trace = []
            find_squares_of_length(r, d, trace=trace)
            for a, b in zip(trace, trace[1:]):
                i, j = a.i, b.i
                assert i < j
                for off in (0, d, 2 * d):
                    piece = s[i + off - 1:j + off - 1]
                    assert len(set(piece)) <= 1, (s, d, i, j, off)


def test_shift_bound_three_per_run():
    for s in corpus_strings(100, 128, 408):
        r, _ = encode(s)
        for d in range(1, r.n // 2 + 1):
            c = WorkCounters()
            find_squares_of_length(r, d, counters=c)
            assert c.window_jumps <= 3 * r.m, (s, d)


def test_half_length_window_flags():
    r, _ = encode("aabbaabb")
    all_runs = find_all_squares(r)
    narrowed = find_all_squares(r, d_min=2, d_max=3)
    assert narrowed == [x for x in all_runs if 2 <= x.half_len <= 3]
    with pytest.raises(ValueError):
        find_all_squares(r, d_min=0)
    with pytest.raises(ValueError):
        find_all_squares(r, d_max=5)
