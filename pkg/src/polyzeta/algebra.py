"""
Harmonic (stuffle) product, star expansion and the circled product.

Signed entries combine as in the alternating setting: when two heads
merge, exponents add and signs multiply.  With all signs positive this is
the classical quasi-shuffle.

    >>> print(stuffle(idx(1), idx(1)))
    2*(1,1) + (2)
    >>> print(star_expand(idx(1, 1, 1)))
    (1,1,1) + (2,1) + (1,2) + (3)
    >>> print(circled_star(idx(2, 1), idx(1, 1)))
    2*(3,1,1) + (3,2)
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

from .index import EMPTY, FormalSum, SignedIndex, idx


def merge(a: int, b: int) -> int:
    """Merge two signed entries: exponents add, signs multiply."""
    e = abs(a) + abs(b)
    return e if (a > 0) == (b > 0) else -e


@lru_cache(maxsize=1 << 16)
def _stuffle(k: tuple, l: tuple) -> tuple:
    # returned as a tuple of (index tuple, multiplicity) so it can be cached
    if not k:
        return ((l, 1),)
    if not l:
        return ((k, 1),)
    acc: Counter = Counter()
    for w, c in _stuffle(k[1:], l):
        acc[(k[0],) + w] += c
    for w, c in _stuffle(k, l[1:]):
        acc[(l[0],) + w] += c
    for w, c in _stuffle(k[1:], l[1:]):
        acc[(merge(k[0], l[0]),) + w] += c
    return tuple(acc.items())


def stuffle(k: SignedIndex, l: SignedIndex) -> FormalSum:
    return FormalSum((SignedIndex(w), c) for w, c in _stuffle(k.parts, l.parts))


def stuffle_sums(a: FormalSum, b: FormalSum) -> FormalSum:
    """Bilinear extension of the stuffle to formal sums of indices."""
    acc: Counter = Counter()
    for u, cu in a.items():
        for v, cv in b.items():
            for w, c in _stuffle(u.parts, v.parts):
                acc[w] += cu * cv * c
    return FormalSum((SignedIndex(w), c) for w, c in acc.items())


def star_terms(k: tuple):
    """Yield the 2^(r-1) tuples of the star expansion (with repetition)."""
    if not k:
        yield ()
        return
    for cuts in product((False, True), repeat=len(k) - 1):
        out = [k[0]]
        for part, fuse in zip(k[1:], cuts):
            if fuse:
                out[-1] = merge(out[-1], part)
            else:
                out.append(part)
        yield tuple(out)


def star_expand(k: SignedIndex) -> FormalSum:
    """Formal sum whose plain harmonic sums give the star sums of ``k``."""
    return FormalSum((SignedIndex(t), 1) for t in star_terms(k.parts))


def circled(k: SignedIndex, l: SignedIndex) -> FormalSum:
    """Heads merge, tails stuffle."""
    if not k or not l:
        raise ValueError("circled product needs non-empty operands")
    head = merge(k[0], l[0])
    return FormalSum((SignedIndex((head,) + w), c) for w, c in _stuffle(k.parts[1:], l.parts[1:]))


def circled_star(k: SignedIndex, l: SignedIndex) -> FormalSum:
    """The formal sum k ⊛ l (no star on l)."""
    return circled(k, l)


def ky_expand(k: SignedIndex, l: SignedIndex, zero_head: bool = False) -> FormalSum:
    """Expand k ⊛ l⋆ into plain indices.

    With ``zero_head`` the second operand is the index (0, l_1, l_2, ...):
    its head contributes nothing to the exponent, which is the form that
    appears in the Kaneko-Yamamoto reductions.
    """
    if not k:
        raise ValueError("circled product needs a non-empty left operand")
    acc: Counter = Counter()
    if zero_head:
        if not l:
            acc[k.parts] += 1
            return FormalSum((SignedIndex(w), c) for w, c in acc.items())
        for t in star_terms(l.parts):
            # (0, t) star terms: 0 either stands alone or fuses with t_1
            for w, c in _stuffle(k.parts[1:], t):
                acc[(k[0],) + w] += c
            fused = merge(k[0], t[0])
            for w, c in _stuffle(k.parts[1:], t[1:]):
                acc[(fused,) + w] += c
    else:
        if not l:
            raise ValueError("circled product needs a non-empty right operand")
        for t in star_terms(l.parts):
            head = merge(k[0], t[0])
            for w, c in _stuffle(k.parts[1:], t[1:]):
                acc[(head,) + w] += c
    return FormalSum((SignedIndex(w), c) for w, c in acc.items())


__all__ = [
    "EMPTY",
    "circled",
    "circled_star",
    "idx",
    "ky_expand",
    "merge",
    "star_expand",
    "star_terms",
    "stuffle",
    "stuffle_sums",
]
