"""
Exact finite nested harmonic sums.

Everything here is computed in :class:`fractions.Fraction` by the depth-wise
prefix recursion

    T_r(m) = sum_{j <= m} f_r(j),      T_i(m) = sum_{j <= m} f_i(j) T_{i+1}(j - 1)

(``j`` instead of ``j - 1`` for star sums), which costs O(n r) rational
operations for all ``n`` at once.

    >>> mhs_eval(3, idx(2, 1))
    Fraction(5, 12)
    >>> mhss_eval(2, idx(1, 1))
    Fraction(7, 4)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .index import FormalSum, SignedIndex, as_fraction, idx  # noqa: F401

DEFAULT_MAX_N = 200


def _check_n(n: int, max_n: int):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the cap {max_n}; pass max_n to raise it")


def _table(parts: tuple, n: int, star: bool, x: Fraction) -> tuple:
    """Values of the (star) sum for every upper limit 0..n."""
    # tables are prefix-stable, so build one of a rounded-up length and slice
    size = 32
    while size < n:
        size *= 2
    return _full_table(parts, size, star, x)[:n + 1]


@lru_cache(maxsize=1 << 15)
def _full_table(parts: tuple, n: int, star: bool, x: Fraction) -> tuple:
    if not parts:
        if x == 1:
            return (Fraction(1),) * (n + 1)
        return tuple(x ** m for m in range(n + 1))
    inner = _full_table(parts[1:], n, star, x)
    e = abs(parts[0])
    neg = parts[0] < 0
    xi = x if len(parts) == 1 else Fraction(1)
    # for the innermost level the weight x^j enters through f(j)
    out = [Fraction(0)] * (n + 1)
    acc = Fraction(0)
    for j in range(1, n + 1):
        f = Fraction(-1 if (neg and j % 2) else 1, j ** e)
        if xi != 1:
            f *= xi ** j
        acc += f * (inner[j] if star else inner[j - 1]) if len(parts) > 1 else f
        out[j] = acc
    return tuple(out)


def mhs_table(n: int, k: SignedIndex, max_n: int = DEFAULT_MAX_N) -> tuple:
    _check_n(n, max_n)
    return _table(k.parts, n, False, Fraction(1))


def mhss_table(n: int, k: SignedIndex, max_n: int = DEFAULT_MAX_N) -> tuple:
    _check_n(n, max_n)
    return _table(k.parts, n, True, Fraction(1))


def mhs_eval(n: int, k: SignedIndex, max_n: int = DEFAULT_MAX_N) -> Fraction:
    """Sum over n >= n_1 > ... > n_r >= 1; empty index gives 1."""
    return mhs_table(n, k, max_n)[n]


def mhss_eval(n: int, k: SignedIndex, max_n: int = DEFAULT_MAX_N) -> Fraction:
    """Same with weak inequalities n >= n_1 >= ... >= n_r >= 1."""
    return mhss_table(n, k, max_n)[n]


def parametric_star_eval(n: int, k: SignedIndex, x, max_n: int = DEFAULT_MAX_N) -> Fraction:
    """Star sum with an extra x^{n_r} on the innermost variable.

    The empty index gives x^n.
    """
    x = as_fraction(x)
    if abs(x) > 1:
        raise ValueError("need |x| <= 1")
    _check_n(n, max_n)
    if any(p < 0 for p in k.parts):
        raise ValueError("parametric star sums take positive indices")
    return _table(k.parts, n, True, x)[n]


def eval_formal_sum(n: int, fs: FormalSum, max_n: int = DEFAULT_MAX_N) -> Fraction:
    total = Fraction(0)
    for key, c in fs.items():
        total += c * mhs_eval(n, key, max_n)
    return total


def eval_formal_sum_star(n: int, fs: FormalSum, max_n: int = DEFAULT_MAX_N) -> Fraction:
    total = Fraction(0)
    for key, c in fs.items():
        total += c * mhss_eval(n, key, max_n)
    return total


def ky_partial_sum(N: int, k: SignedIndex, l: SignedIndex, zero_head: bool = False,
                   max_n: int = DEFAULT_MAX_N) -> Fraction:
    """Truncation of the Kaneko-Yamamoto series, summed term by term.

    sum_{n<=N} zeta_{n-1}(k_2..) zeta*_n(l_2..) (a_1 b_1)^n / n^{k_1+l_1}
    With ``zero_head`` the second index is (0, l_1, ...).
    """
    _check_n(N, max_n)
    if zero_head:
        lhead, ltail = 1, l.parts
        lexp = 0
    else:
        if not l:
            raise ValueError("non-empty l required")
        lhead, ltail = (1 if l[0] > 0 else -1), l.parts[1:]
        lexp = abs(l[0])
    khead = 1 if k[0] > 0 else -1
    e = abs(k[0]) + lexp
    neg = khead * lhead < 0
    tk = _table(k.parts[1:], N, False, Fraction(1))
    tl = _table(ltail, N, True, Fraction(1))
    total = Fraction(0)
    for n in range(1, N + 1):
        s = -1 if (neg and n % 2) else 1
        total += Fraction(s, n ** e) * tk[n - 1] * tl[n]
    return total
