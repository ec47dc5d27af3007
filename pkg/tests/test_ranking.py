from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bninv import (
    SignedPermutation,
    enumerate_group,
    group_order,
    identity,
    longest_element,
    rank,
    unrank,
)
from helpers import iter_group, window


def test_group_order():
    assert group_order(1) == 2
    assert group_order(3) == 48
    assert group_order(8) == 10321920
    with pytest.raises(ValueError):
        group_order(0)


def test_rank_examples():
    assert rank(window(2, 4, 1, -3, 6, 7, -5, 8)) == 507185
    assert rank(identity(6)) == 1
    assert rank(window(3, -2, 1)) == 21
    for n in range(1, 13):
        assert rank(longest_element(n)) == group_order(n)


def test_unrank_examples():
    assert unrank(8, 1464993) == window(2, 7, -3, 8, -1, -5, 4, 6)
    assert unrank(3, 1) == identity(3)
    assert unrank(3, 21) == window(3, -2, 1)
    assert unrank(3, 48) == longest_element(3)
    assert unrank(1, 2) == window(-1)


def test_unrank_range_errors():
    with pytest.raises(ValueError, match="out of range"):
        unrank(3, 0)
    with pytest.raises(ValueError, match="out of range"):
        unrank(3, 49)
    with pytest.raises(ValueError):
        unrank(0, 1)


def test_round_trip_exhaustive_b4():
    seen = set()
    for w in iter_group(4):
        k = rank(w)
        assert 1 <= k <= 384
        assert unrank(4, k) == w
        seen.add(k)
    assert len(seen) == 384


def test_unrank_then_rank_b4():
    for k in range(1, 385):
        assert rank(unrank(4, k)) == k


@given(
    st.integers(1, 8).flatmap(
        lambda n: st.tuples(
            st.permutations(list(range(1, n + 1))),
            st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n),
        )
    )
)
def test_round_trip_random(args):
    values, signs = args
    w = window(*(s * v for v, s in zip(values, signs)))
    assert unrank(w.n, rank(w)) == w


def test_big_rank_smoke():
    for n, k in ((10, 10**6), (16, 10**12), (20, group_order(20) - 7)):
        assert rank(unrank(n, k)) == k


def test_enumerate_matches_unrank():
    for n in (1, 2, 3, 4):
        stream = list(enumerate_group(n))
        assert stream == [unrank(n, k) for k in range(1, group_order(n) + 1)]
        assert len(set(stream)) == group_order(n)


def test_enumerate_first_and_specific():
    stream = list(enumerate_group(3))
    assert stream[0] == identity(3)
    assert stream[20] == window(3, -2, 1)
    assert stream[-1] == longest_element(3)


def test_enumerate_restart():
    assert next(iter(enumerate_group(3, start_rank=21))) == unrank(3, 21)
    tail = list(enumerate_group(4, start_rank=100))
    assert tail == [unrank(4, k) for k in range(100, 385)]


def test_enumerate_subranges():
    chunk1 = list(enumerate_group(3, 5, 9))
    assert chunk1 == [unrank(3, k) for k in range(5, 10)]
    assert list(enumerate_group(3, 7, 6)) == []
    assert list(enumerate_group(3, 48, 48)) == [longest_element(3)]


def test_enumerate_shard_independence():
    full = Counter(enumerate_group(4))
    sharded: Counter[SignedPermutation] = Counter()
    for lo, hi in ((1, 100), (101, 200), (201, 384)):
        sharded.update(enumerate_group(4, lo, hi))
    assert sharded == full


def test_enumerate_range_errors():
    with pytest.raises(ValueError, match="out of range"):
        list(enumerate_group(3, 0))
    with pytest.raises(ValueError, match="out of range"):
        list(enumerate_group(3, 1, 49))
