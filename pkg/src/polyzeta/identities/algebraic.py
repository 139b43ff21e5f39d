"""
Exact identities of the harmonic algebra, checked on truncated sums:
the stuffle homomorphism, the star expansion and the truncated form of
k (*) l^star.  Both sides reduce to rationals under canonical().
"""

from __future__ import annotations

import random

from ..algebra import circled_star, star_expand, stuffle
from ..expression import Expression, HarmonicSum
from ..finite import ky_partial_sum
from ..index import FormalSum, SignedIndex
from .common import IdentityInstance, check, register


def random_signed_index(rng: random.Random, max_depth: int = 3, max_weight: int = 6) -> SignedIndex:
    depth = rng.randint(1, max_depth)
    budget = max_weight - depth
    parts = []
    for _ in range(depth):
        extra = rng.randint(0, budget)
        budget -= extra
        parts.append((1 + extra) * rng.choice((1, -1)))
    rng.shuffle(parts)
    return SignedIndex(tuple(parts))


def random_pairs(seed: int, count: int) -> list:
    rng = random.Random(seed)
    return [(random_signed_index(rng), random_signed_index(rng)) for _ in range(count)]


def _h_sum(n: int, fs: FormalSum, star: bool = False) -> Expression:
    out = Expression()
    for key, c in fs.items():
        out = out + Expression.atom(HarmonicSum(n, key, star)) * c
    return out


def _h(n, k, star=False) -> Expression:
    return Expression.atom(HarmonicSum(n, SignedIndex(tuple(k)), star))


def _check_n(n):
    check(1 <= n <= 200, "need 1 <= n <= 200")


def _pair_grid(seed=0, count=40):
    return [{"u": list(u.parts), "v": list(v.parts), "n": 1 + i % 30}
            for i, (u, v) in enumerate(random_pairs(seed, count))]


@register("ALG-STUFFLE", [("u", "list"), ("v", "list"), ("n", "int")],
          "zeta_n(u * v) = zeta_n(u) zeta_n(v)", grid=_pair_grid)
def gen_stuffle(u, v, n) -> IdentityInstance:
    _check_n(n)
    lhs = _h_sum(n, stuffle(SignedIndex(tuple(u)), SignedIndex(tuple(v))))
    rhs = _h(n, u) * _h(n, v)
    return IdentityInstance("ALG-STUFFLE", {"u": list(u), "v": list(v), "n": n}, lhs, rhs, mode="exact")


def _star_grid(seed=0, count=40):
    rng = random.Random(seed)
    return [{"k": list(random_signed_index(rng, 4, 8).parts), "n": 1 + i % 30} for i in range(count)]


@register("ALG-STAR", [("k", "list"), ("n", "int")],
          "zeta*_n(k) = zeta_n(k^star)", grid=_star_grid)
def gen_star(k, n) -> IdentityInstance:
    _check_n(n)
    lhs = _h(n, k, star=True)
    rhs = _h_sum(n, star_expand(SignedIndex(tuple(k))))
    return IdentityInstance("ALG-STAR", {"k": list(k), "n": n}, lhs, rhs, mode="exact")


def _circled_grid(seed=0, count=30):
    return [{"k": list(u.parts), "l": list(v.parts), "n": 1 + i % 30}
            for i, (u, v) in enumerate(random_pairs(seed + 1, count))]


@register("ALG-CIRCLED", [("k", "list"), ("l", "list"), ("n", "int")],
          "truncated k (*) l^star series = zeta_N of the expanded index", grid=_circled_grid)
def gen_circled(k, l, n) -> IdentityInstance:
    _check_n(n)
    ks, ls = SignedIndex(tuple(k)), SignedIndex(tuple(l))
    check(ks.depth >= 1 and ls.depth >= 1, "need non-empty k and l")
    # the left side is the term-by-term partial sum, an exact rational
    lhs = Expression.const(ky_partial_sum(n, ks, ls))
    # k (*) l^star, expanded one star term of l at a time
    acc: dict = {}
    for t, c in star_expand(ls).items():
        for w, d in circled_star(ks, t).items():
            acc[w] = acc.get(w, 0) + c * d
    rhs = _h_sum(n, FormalSum(acc))
    return IdentityInstance("ALG-CIRCLED", {"k": list(k), "l": list(l), "n": n}, lhs, rhs, mode="exact")
