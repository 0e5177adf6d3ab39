import random

import pytest
from hypothesis import given, strategies as st

from abelian_rle import (AlphabetMap, DiffTracker, ParikhVector, decode,
                         encode, from_factors, parikh_of_range, succ)

texts = st.text(alphabet="abcd", max_size=60)


def test_encode_fixture():
    r, amap = encode("aabbbbcccaaa$")
    assert [(amap.chars[c], e) for c, e in r.factors] == \
        [("a", 2), ("b", 4), ("c", 3), ("a", 3), ("$", 1)]
    assert r.m == 5
    assert r.n == 13


def test_encode_empty():
    r, amap = encode("")
    assert r.factors == () and r.m == 0 and r.n == 0
    assert amap.sigma == 0
    assert decode(r) == ""


def test_encode_unary():
    r, _ = encode("aaaa")
    assert r.factors == ((0, 4),) and r.m == 1 and r.n == 4


def test_decode_fixtures():
    r, _ = from_factors([("a", 2), ("b", 1)])
    assert decode(r) == "aab"
    fig1 = [("a", 2), ("b", 2), ("a", 3), ("b", 1), ("a", 1),
            ("b", 1), ("a", 4), ("b", 2), ("a", 1)]
    r, _ = from_factors(fig1)
    assert decode(r) == "aabbaaababaaaabba"
    assert r.n == 17


def test_from_factors_merges_adjacent():
    r, _ = from_factors([("a", 2), ("a", 3), ("b", 1)])
    assert decode(r) == "aaaaab"
    assert r.m == 2


def test_from_factors_rejects_bad_runs():
    with pytest.raises(ValueError):
        from_factors([("a", 0)])
    with pytest.raises(ValueError):
        from_factors([("ab", 2)])


def test_succ_fixtures():
    r, _ = encode("aabbb")
    assert succ(r, 1) == 3
    assert succ(r, 3) == 5  # boundary set {1, 3, 5}
    r, _ = encode("aaaa")
    assert succ(r, 2) == 4  # the last position always bounds
    assert succ(r, 4) == 5  # sentinel n + 1


def test_succ_out_of_range():
    r, _ = encode("ab")
    with pytest.raises(ValueError):
        succ(r, 0)
    with pytest.raises(ValueError):
        succ(r, 3)


def test_parikh_fixtures():
    r, amap = encode("aabba")
    v = parikh_of_range(r, 1, 3)
    assert v.counts == [2, 1]
    r, _ = encode("abaab")
    assert parikh_of_range(r, 1, 5).counts == [3, 2]
    assert parikh_of_range(r, 3, 2).counts == [0, 0]  # empty range


def test_parikh_bounds():
    r, _ = encode("abc")
    with pytest.raises(ValueError):
        parikh_of_range(r, 0, 2)
    with pytest.raises(ValueError):
        parikh_of_range(r, 1, 4)
    with pytest.raises(ValueError):
        parikh_of_range(r, 3, 1)


@given(texts)
def test_round_trip(t):
    r, _ = encode(t)
    assert decode(r) == t


@given(texts)
def test_factor_maximality(t):
    r, _ = encode(t)
    assert all(r.factors[i][0] != r.factors[i + 1][0] for i in range(r.m - 1))
    assert all(exp >= 1 for _, exp in r.factors)
    assert sum(exp for _, exp in r.factors) == r.n
    assert r.m <= r.n
    r2, _ = encode(decode(r), r.alphabet)
    assert r2.factors == r.factors


@given(texts.filter(bool))
def test_succ_consistency(t):
    r, _ = encode(t)
    bound = sorted({1, *r.starts, r.n})
    for i in range(1, r.n + 1):
        expected = min((b for b in bound if b > i), default=r.n + 1)
        assert succ(r, i) == expected
        assert i < succ(r, i) <= r.n + 1
    # inside one run the character is constant up to the next boundary
    for i in range(1, r.n):
        s = succ(r, i)
        if s <= r.n and s in set(r.starts):
            assert len({t[j - 1] for j in range(i, s)}) == 1


@given(texts.filter(bool), st.data())
def test_parikh_matches_direct_scan(t, data):
    r, amap = encode(t)
    i = data.draw(st.integers(1, r.n))
    j = data.draw(st.integers(i - 1, r.n))
    v = parikh_of_range(r, i, j)
    piece = t[i - 1:j]
    assert v.counts == [piece.count(c) for c in amap.chars]
    assert v.length() == len(piece)


def test_parikh_vector_sub_of():
    assert ParikhVector([1, 0, 2]).sub_of(ParikhVector([1, 1, 2]))
    assert not ParikhVector([2, 0]).sub_of(ParikhVector([1, 5]))
    assert ParikhVector.zeros(3).sub_of(ParikhVector([0, 0, 0]))


def test_alphabet_map_union():
    amap = AlphabetMap.from_texts("ba", "cb")
    assert amap.chars == ("a", "b", "c")
    assert amap.index_of == {"a": 0, "b": 1, "c": 2}


@given(st.integers(1, 5), st.lists(
    st.tuples(st.booleans(), st.integers(0, 4), st.sampled_from([-1, 1])),
    max_size=80))
def test_diff_tracker_matches_fresh_diff(sigma, ops):
    tr = DiffTracker(ParikhVector.zeros(sigma), ParikhVector.zeros(sigma))
    for is_left, coord, delta in ops:
        coord %= sigma
        if is_left:
            tr.add_left(coord, delta)
        else:
            tr.add_right(coord, delta)
        fresh = sum(1 for a, b in zip(tr.left.counts, tr.right.counts) if a != b)
        assert tr.mismatch_count == fresh
        assert tr.mismatches() == {c for c, (a, b) in
                                   enumerate(zip(tr.left.counts, tr.right.counts))
                                   if a != b}


def test_diff_tracker_shift_windows():
    rng = random.Random(0)
    sigma = 4
    tr = DiffTracker(ParikhVector([3, 1, 0, 2]), ParikhVector([2, 2, 1, 1]))
    for _ in range(200):
        c1, c2, c3 = (rng.randrange(sigma) for _ in range(3))
        tr.shift_windows(c1, c2, c3, rng.randint(1, 3))
        fresh = sum(1 for a, b in zip(tr.left.counts, tr.right.counts) if a != b)
        assert tr.mismatch_count == fresh


def test_shared_alphabet_encode_rejects_unknown():
    amap = AlphabetMap.from_texts("ab")
    with pytest.raises(ValueError):
        encode("abc", amap)
