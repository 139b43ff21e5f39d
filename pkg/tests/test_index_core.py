from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polyzeta.index import (EMPTY, ArgumentedIndex, FormalSum, SignedIndex, box_join, diamond_join,
                            format_index, idx, is_admissible, parse_index, repeat_block)

entries = st.integers(1, 9).flatmap(lambda e: st.sampled_from([e, -e]))
indices = st.lists(entries, max_size=8).map(lambda xs: SignedIndex(tuple(xs)))


def test_repeat_block():
    s = ("s1", "s2", "s3")
    assert repeat_block(s, 4) == s * 4 and len(repeat_block(s, 4)) == 12
    assert repeat_block((2,), 0) == ()
    assert repeat_block((1,), 3) == (1, 1, 1)
    with pytest.raises(ValueError):
        repeat_block((1,), -1)


def test_box_join_table():
    assert box_join(3, 0, 2) == (4,)
    assert box_join(3, 2, 2) == (3, 1, 2)
    assert box_join(1, 1, 1) == (1, 1)
    for bad in ((0, 1, 1), (1, 1, 0)):
        with pytest.raises(ValueError):
            box_join(*bad)


@given(st.integers(1, 6), st.integers(0, 6), st.integers(1, 6))
def test_box_join_weight(a, p, b):
    assert sum(box_join(a, p, b)) == a + b + p - 1


def test_diamond_join_table():
    assert diamond_join(-1, 0, -1) == (1,)
    assert diamond_join(-1, 2, -1) == (-1, 1, -1)
    a = Fraction(2, 7)
    assert diamond_join(a, 0, 1) == (a,)


def test_admissibility():
    assert not is_admissible(idx(1))
    assert is_admissible(idx(-1))
    assert is_admissible(idx(2, 1, 1))
    assert is_admissible(EMPTY)


def test_parse_format():
    k = parse_index("-2,3,-1,4")
    assert k.pairs() == ((2, -1), (3, 1), (1, -1), (4, 1))
    assert parse_index("") == EMPTY and EMPTY.depth == 0 and EMPTY.weight == 0
    assert format_index(parse_index("2,1")) == "2,1"
    assert parse_index("(2, -1)") == idx(2, -1)
    for bad in ("1,0", "1,x", "1,,2"):
        with pytest.raises(ValueError):
            parse_index(bad)


@settings(max_examples=1000)
@given(indices)
def test_parse_format_round_trip(k):
    assert parse_index(format_index(k)) == k


@given(indices, indices)
def test_weight_depth_additive(u, v):
    w = u + v
    assert w.weight == u.weight + v.weight
    assert w.depth == u.depth + v.depth


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.integers(0, 4))
def test_repeat_depth(block, d):
    assert len(repeat_block(block, d)) == d * len(block)


def test_from_pairs_rejects_bad_data():
    assert SignedIndex.from_pairs([(2, -1), (1, 1)]) == idx(-2, 1)
    with pytest.raises(ValueError):
        SignedIndex.from_pairs([(0, 1)])
    with pytest.raises(ValueError):
        SignedIndex.from_pairs([(1, 2)])


def test_formal_sum_canonical():
    a, b = idx(2, 1), idx(3)
    fs = FormalSum([(a, 1), (b, 2), (a, -1)])
    assert dict(fs.items()) == {b: 2}
    assert FormalSum(fs.items()) == fs
    # deeper indices print first
    assert list(FormalSum([(b, 1), (a, 1)])) == [a, b]


def test_argumented_admissibility():
    assert ArgumentedIndex((2,), (Fraction(1),)).is_admissible()
    assert not ArgumentedIndex((1,), (Fraction(1),)).is_admissible()
    assert ArgumentedIndex((1,), (Fraction(-1),)).is_admissible()
