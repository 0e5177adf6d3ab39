import pytest
from hypothesis import given, settings, strategies as st

from abelian_rle import (RegularPeriod, decompose, encode, find_regular_periods,
                         from_factors, is_regular_period, naive_periods)
from abelian_rle.bench import WorkCounters

from conftest import corpus_strings

FIG1 = [("a", 2), ("b", 2), ("a", 3), ("b", 1), ("a", 1),
        ("b", 1), ("a", 4), ("b", 2), ("a", 1)]


def test_fig1_contains_3_2():
    r, _ = from_factors(FIG1)
    assert RegularPeriod(3, 2) in find_regular_periods(r)


def test_fig1_d3_block_details():
    # blocks of length 3 all carry counts <2,1> and the 2-tail is dominated
    r, _ = from_factors(FIG1)
    ok, t = is_regular_period(r, 3)
    assert ok and t == 2


def test_unary_every_d_qualifies():
    r, _ = encode("aaaa")
    assert find_regular_periods(r) == [RegularPeriod(1, 0), RegularPeriod(2, 0)]
    r, _ = encode("a" * 9)
    for d in range(1, 5):
        assert is_regular_period(r, d) == (True, 9 % d)


def test_ab_pinned_by_oracle():
    # d = 1 splits "ab" into unequal complete blocks, so nothing qualifies
    assert naive_periods("ab") == []
    r, _ = encode("ab")
    assert find_regular_periods(r) == []


def test_abab_pinned_by_oracle():
    assert naive_periods("abab") == [RegularPeriod(2, 0)]
    r, _ = encode("abab")
    assert find_regular_periods(r) == [RegularPeriod(2, 0)]


def test_aabb_d2_blocks_differ():
    r, _ = encode("aabb")
    assert is_regular_period(r, 2) == (False, 0)


def test_d_out_of_range():
    r, _ = encode("abc")
    with pytest.raises(ValueError):
        is_regular_period(r, 0)
    with pytest.raises(ValueError):
        is_regular_period(r, 2)


def test_single_char_no_periods():
    r, _ = encode("a")
    assert find_regular_periods(r) == []


def test_decompose():
    b = decompose(17, 3)
    assert b.complete_blocks == 5
    assert b.tail_start == 16


def test_early_exit_on_block_inside_run():
    # first complete block sits inside the leading run: constant work
    r, _ = encode("a" * 10 + "b")
    c = WorkCounters()
    ok, _ = is_regular_period(r, 2, counters=c)
    assert not ok
    assert c.parikh_entry_ops <= 2 * r.alphabet.sigma + 2


def test_divisibility_tail_is_empty():
    r, _ = encode("abbaba")
    for d in range(1, 4):
        ok, t = is_regular_period(r, d)
        assert t == 6 % d
        if 6 % d == 0:
            assert t == 0


@given(st.text(alphabet="abc", min_size=2, max_size=48))
@settings(max_examples=150)
def test_matches_oracle(t):
    r, _ = encode(t)
    assert find_regular_periods(r) == naive_periods(t)


def test_matches_oracle_on_corpus():
    for s in corpus_strings(150, 128, 909):
        r, _ = encode(s)
        assert find_regular_periods(r) == naive_periods(s), s


def test_work_bound_per_d():
    # per block length the check touches O(m) Parikh entries; C pinned at 8
    for s in corpus_strings(120, 128, 910):
        r, _ = encode(s)
        for d in range(1, r.n // 2 + 1):
            c = WorkCounters()
            is_regular_period(r, d, counters=c)
            assert c.parikh_entry_ops <= 8 * r.m, (s, d)


def test_results_ascending_and_canonical():
    for s in corpus_strings(60, 96, 911):
        r, _ = encode(s)
        ps = find_regular_periods(r)
        assert ps == sorted(ps, key=lambda x: x.p)
        assert all(1 <= x.p <= r.n // 2 and x.t == r.n % x.p for x in ps)
