from fractions import Fraction

from hypothesis import given, settings, strategies as st

from polyzeta.algebra import circled, circled_star, ky_expand, star_expand, stuffle, stuffle_sums
from polyzeta.finite import eval_formal_sum, mhs_eval, mhss_eval
from polyzeta.index import EMPTY, FormalSum, SignedIndex, idx

entry = st.integers(1, 3).flatmap(lambda e: st.sampled_from([e, -e]))
small = st.lists(entry, max_size=3).map(lambda xs: SignedIndex(tuple(xs)))
nonempty = st.lists(entry, min_size=1, max_size=3).map(lambda xs: SignedIndex(tuple(xs)))


def fs(*pairs):
    return FormalSum((idx(*k), c) for k, c in pairs)


def test_stuffle_examples():
    assert stuffle(idx(1), idx(1)) == fs(((1, 1), 2), ((2,), 1))
    assert str(stuffle(idx(1), idx(1))) == "2*(1,1) + (2)"
    # signs multiply when heads merge
    assert stuffle(idx(-1), idx(-1)) == fs(((-1, -1), 2), ((2,), 1))
    assert stuffle(EMPTY, idx(2, 1)) == fs(((2, 1), 1))


def test_stuffle_eight_terms():
    # zeta_n(k1) zeta*_n(k2, k3) with k = 2, 3, 5 so no two terms collide
    out = stuffle_sums(FormalSum.single(idx(2)), star_expand(idx(3, 5)))
    expect = fs(((2, 3, 5), 1), ((5, 5), 1), ((3, 2, 5), 1), ((3, 7), 1),
                ((3, 5, 2), 1), ((2, 8), 1), ((10,), 1), ((8, 2), 1))
    assert out == expect and len(out) == 8


def test_stuffle_interleavings_count():
    # no collisions possible only in the term count of the shuffle part plus merges
    for r in range(4):
        for s in range(4):
            u = SignedIndex(tuple(range(1, r + 1)))
            v = SignedIndex(tuple(range(10, 10 + s)))
            total = sum(stuffle(u, v).values())
            # Delannoy number D(r, s)
            d = sum(_binom(r, k) * _binom(s, k) * 2 ** k for k in range(min(r, s) + 1))
            assert total == d


def _binom(n, k):
    from math import comb

    return comb(n, k)


def test_star_expand_examples():
    assert star_expand(idx(2, 1)) == fs(((2, 1), 1), ((3,), 1))
    assert star_expand(idx(1, 1, 1)) == fs(((1, 1, 1), 1), ((2, 1), 1), ((1, 2), 1), ((3,), 1))
    assert star_expand(EMPTY) == FormalSum.single(EMPTY)
    assert star_expand(idx(-1, -1)) == fs(((-1, -1), 1), ((2,), 1))


@given(st.lists(entry, max_size=6).map(lambda xs: SignedIndex(tuple(xs))))
def test_star_expand_size(k):
    out = star_expand(k)
    assert sum(out.values()) == 2 ** max(k.depth - 1, 0)


def test_circled_examples():
    assert circled_star(idx(2), idx(1)) == fs(((3,), 1))
    assert circled_star(idx(2, 1), idx(1, 1)) == fs(((3, 1, 1), 2), ((3, 2), 1))
    assert circled_star(idx(2, 5, 7), idx(1)) == fs(((3, 5, 7), 1))
    assert circled_star(idx(-2), idx(-1)) == fs(((3,), 1))


def test_arakawa_kaneko_shape():
    # (k) (*) (1, {1}_{p-1}) = (k+1, {1}_{p-1}) -- a single index
    for k in range(1, 4):
        for p in range(1, 4):
            assert circled_star(idx(k), SignedIndex((1,) * p)) == fs(((k + 1,) + (1,) * (p - 1), 1))


@given(small, small)
def test_stuffle_commutative(u, v):
    assert stuffle(u, v) == stuffle(v, u)


@settings(max_examples=50)
@given(small, small, small)
def test_stuffle_associative(u, v, w):
    left = stuffle_sums(stuffle(u, v), FormalSum.single(w))
    right = stuffle_sums(FormalSum.single(u), stuffle(v, w))
    assert left == right


@settings(max_examples=60)
@given(small, small, st.integers(0, 12))
def test_stuffle_homomorphism(u, v, n):
    assert eval_formal_sum(n, stuffle(u, v)) == mhs_eval(n, u) * mhs_eval(n, v)


@settings(max_examples=60)
@given(st.lists(entry, max_size=4).map(lambda xs: SignedIndex(tuple(xs))), st.integers(0, 12))
def test_star_expansion_exact(k, n):
    assert mhss_eval(n, k) == eval_formal_sum(n, star_expand(k))


@given(nonempty, nonempty)
def test_circled_term_count(k, l):
    assert sum(circled_star(k, l).values()) == sum(stuffle(k[1:], l[1:]).values())
    assert circled(k, l) == circled_star(k, l)


def test_ky_expand_is_circled_of_star():
    k, l = idx(2, -1), idx(1, 2, -1)
    acc = FormalSum()
    for t, c in star_expand(l).items():
        acc = acc + circled_star(k, t).scale(c)
    assert ky_expand(k, l) == acc
    # the zero-headed form: l itself is the star part
    assert ky_expand(idx(2), idx(2), zero_head=True) == fs(((2, 2), 1), ((4,), 1))
    assert ky_expand(idx(3), EMPTY, zero_head=True) == fs(((3,), 1))


def test_exactness_of_sample_value():
    # (-1/2)^2 = 2 * (-1/2) + 5/4 at n = 2
    assert mhs_eval(2, idx(-1)) ** 2 == Fraction(1, 4)
    assert eval_formal_sum(2, stuffle(idx(-1), idx(-1))) == Fraction(1, 4)
