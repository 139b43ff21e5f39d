"""
Relations between multiple polylogarithms coming from substitutions in the
iterated integral attached to the word

    (w_{a_1})^{m_1} (dt/t)^{p_1} (w_{a_2})^{m_2} ... (dt/t)^{p_k} (w_{a_{k+1}})^{m_{k+1}}.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial

from ..expression import Expression, WordIntegral, li, log, zeta
from ..index import as_fraction
from ..words import Letter, Word
from .common import (IdentityInstance, L21, LI, ParameterError, check, diamond, eq21_index,
                     register, sign)


def _check_shape(m, p, m1_zero_ok=True):
    k = len(p)
    check(k >= 1, "need k >= 1 (at least one p)")
    check(len(m) == k + 1, f"need k+1 = {k + 1} entries in m, got {len(m)}")
    check(all(x >= 0 for x in p), "p_i must be >= 0")
    check(all(x >= 1 for x in m[1:]), "m_j must be >= 1 for j >= 2")
    check(m[0] >= (0 if m1_zero_ok else 1), "m_1 out of range")


def _grid_small():
    out = []
    for m in ([1, 1], [0, 1], [1, 2], [2, 1], [0, 2]):
        for p in ([0], [1], [2]):
            out.append({"m": m, "p": p})
    for m in ([1, 1, 1], [0, 1, 1], [1, 2, 1]):
        for p in ([1, 0], [0, 1], [1, 1], [2, 0]):
            out.append({"m": m, "p": p})
    return out


# ---------------------------------------------------------------------------
# substitution expansion


def _thm22_grid():
    out = []
    for i, g in enumerate(_grid_small()):
        a = (Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3))[i % 4]
        out.append(dict(g, a=a))
    return out


@register("THM-2.2", [("m", "list"), ("p", "list"), ("a", "rat")],
          "Li at a single argument a as a signed sum of unit-exponent polylogs",
          grid=_thm22_grid)
def gen_thm22(m, p, a) -> IdentityInstance:
    m, p, a = list(m), list(p), as_fraction(a)
    _check_shape(m, p)
    check(-1 <= a < 1 and a != 0, "a must lie in [-1, 0) or (0, 1)")
    k = len(p)
    P, M = sum(p), sum(m)
    lhs = L21(m, p, [a] * (k + 1))
    # bold p_i: reverse partial sums p_k + ... + p_{k+1-i}
    bold = [0]
    for i in range(1, k + 1):
        bold.append(bold[-1] + p[k - i])
    rhs = Expression()
    for sig in product((Fraction(1), a), repeat=P):
        coeff = 1
        for s in sig:
            coeff *= 1 if s == 1 else -1  # eta(s)/s
        args = [a] + [Fraction(1)] * (m[k] - 1)
        for i in range(1, k + 1):
            q = p[k - i]
            block = sig[bold[i - 1]:bold[i]]
            if q == 0:
                seg = [Fraction(1)]
            else:
                seg = [block[0] / a] + [block[t + 1] / block[t] for t in range(q - 1)] + [a / block[-1]]
            tail = m[k - i] - 1
            if i == k and m[0] == 0:
                seg = seg[:-1]
                tail = 0
            args += seg + [Fraction(1)] * tail
        rhs = rhs + LI([1] * (M + P), args) * coeff
    return IdentityInstance("THM-2.2", {"m": m, "p": p, "a": a}, lhs, rhs)


# ---------------------------------------------------------------------------
# reflection t -> 1 - t


def _thm23_grid():
    choices = (Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 3))
    out = []
    for i, g in enumerate(_grid_small()):
        k = len(g["p"])
        out.append(dict(g, a=[choices[(i + j) % 5] for j in range(k + 1)]))
    return out


@register("THM-2.3", [("m", "list"), ("p", "list"), ("a", "rats")],
          "reflection of the word integral, polylog against unit-exponent polylog",
          grid=_thm23_grid)
def gen_thm23(m, p, a) -> IdentityInstance:
    m, p = list(m), list(p)
    a = [as_fraction(x) for x in a]
    _check_shape(m, p)
    k = len(p)
    check(len(a) == k + 1, "need k+1 arguments")
    check(all(-1 <= x <= Fraction(1, 2) and x != 0 for x in a), "a_l must lie in [-1, 1/2], nonzero")
    P, M = sum(p), sum(m)
    lhs = L21(m, p, a)

    def A(l):  # 1-based
        return a[l - 1]

    args = [A(k + 1) / (A(k + 1) - 1)]
    for i in range(1, k + 1):
        args += [Fraction(1)] * (m[k + 1 - i] - 1)
        q = p[k - i]
        left, right = (A(k + 2 - i) - 1) / A(k + 2 - i), A(k + 1 - i) / (A(k + 1 - i) - 1)
        if i == k and m[0] == 0:
            if q >= 1:
                args += [left] + [Fraction(1)] * (q - 1)
        else:
            args += diamond(left, q, right)
    if m[0] >= 1:
        args += [Fraction(1)] * (m[0] - 1)
    rhs = LI([1] * (M + P), args) * sign(M)
    return IdentityInstance("THM-2.3", {"m": m, "p": p, "a": a}, lhs, rhs)


def _b4_signed(m, p) -> list:
    k = len(p)
    parts = [-1] + [1] * (m[k] - 1)
    for i in range(k, 0, -1):  # blocks for p_k, ..., p_1
        q = p[i - 1]
        if i == 1 and m[0] == 0:
            if q >= 1:
                parts += [-1] + [1] * (q - 1)
            break
        parts += [-1] + [1] * (q - 1) + [-1] if q >= 1 else [1]
        parts += [1] * (m[i - 1] - 1)
    return parts


def _b4_grid():
    return _grid_small() + [{"m": [2, 1, 1], "p": [0, 2]}, {"m": [0, 2, 1], "p": [2, 1]}]


@register("EQ-b4", [("m", "list"), ("p", "list")],
          "polylog values at 1/2 against unit-exponent alternating MZVs", grid=_b4_grid)
def gen_b4(m, p) -> IdentityInstance:
    m, p = list(m), list(p)
    _check_shape(m, p)
    k = len(p)
    lhs = L21(m, p, [Fraction(1, 2)] * (k + 1))
    rhs = zeta(*_b4_signed(m, p)) * sign(sum(m))
    return IdentityInstance("EQ-b4", {"m": m, "p": p}, lhs, rhs)


# ---------------------------------------------------------------------------
# path reversal with logarithmic end terms


def _thm24_grid():
    choices = (Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3))
    out = []
    for i, (m, p) in enumerate([([1, 1], [0]), ([1, 1], [1]), ([1, 1], [2]), ([2, 1], [0]), ([2, 1], [1]), ([1, 2], [3]),
                                ([1, 1, 1], [1, 1]), ([1, 1, 1], [0, 1]), ([1, 2, 1], [1, 0]),
                                ([2, 1, 1], [1, 2]), ([1, 1, 1, 1], [1, 0, 1]),
                                ([1, 1, 1, 1], [1, 1, 1]), ([1, 2, 1, 1], [0, 1, 2])]):
        out.append({"m": m, "p": p, "a": [choices[(i + j) % 4] for j in range(len(m))]})
    return out


@register("THM-2.4", [("m", "list"), ("p", "list"), ("a", "rats")],
          "reversal relation for polylogs with log(1-a) end weights", grid=_thm24_grid)
def gen_thm24(m, p, a) -> IdentityInstance:
    m, p = list(m), list(p)
    a = [as_fraction(x) for x in a]
    k = len(p)
    check(k >= 1 and len(m) == k + 1 and len(a) == k + 1, "need len(m) == len(a) == len(p) + 1")
    check(all(x >= 1 for x in m) and all(x >= 0 for x in p), "need m_j >= 1, p_i >= 0")
    check(all(-1 <= x <= Fraction(1, 2) and x != 0 for x in a), "a_l must lie in [-1, 1/2], nonzero")
    lhs, rhs = _thm24_sides(m, p, a)
    notes = []
    if k >= 2:
        notes.append("first boundary product uses {1}_{m_1-1}")
    elif p[0] == 0:
        notes.append("p_1 = 0: sum over i = 1..-1 taken as minus the i = 0 term")
    return IdentityInstance("THM-2.4", {"m": m, "p": p, "a": a}, lhs, rhs, notes=notes)


def _thm24_sides(m, p, a):
    k = len(p)
    pa = lambda j: sum(p[:j])  # noqa: E731  |p|_j
    ma = lambda j: sum(m[:j])  # noqa: E731  |m|_j
    M = lambda j: m[j - 1]  # noqa: E731  1-based views
    Pj = lambda j: p[j - 1]  # noqa: E731
    A = lambda j: a[j - 1]  # noqa: E731
    rev = lambda xs: list(reversed(xs))  # noqa: E731

    L1 = log(1 - A(1))
    Lk = log(1 - A(k + 1))
    lhs = Expression()
    for i in range(M(1) + 1):
        lhs = lhs + L1 ** i * L21([M(1) - i] + m[1:], p, a) * Fraction(1, factorial(i))
    second = Expression()
    for i in range(M(k + 1) + 1):
        second = second + Lk ** i * L21([M(k + 1) - i] + rev(m[:-1]), rev(p), rev(a)) * Fraction(1, factorial(i))
    lhs = lhs + second * sign(pa(k) + ma(k + 1))

    rhs = Expression()
    if k == 1:
        # i = 1..p_1-1; at p_1 = 0 the empty range reads as -(term at i = 0)
        for i in (range(1, Pj(1)) if Pj(1) >= 1 else (0,)):
            t = (L21([0, M(1)], [i], [None, A(1)]) * L21([0, M(2)], [Pj(1) - i], [None, A(2)])
                 * (sign(M(1)) * sign(i - 1)))
            rhs = rhs + (t if i else -t)
        return lhs, rhs

    for j in range(2, k):
        s = sign(pa(j - 1) + ma(j) - 1)
        for i in range(Pj(j) + 1):
            c = L21([0] + rev(m[:j]), [i] + rev(p[:j - 1]), [None] + rev(a[:j]))
            d = L21([0] + m[j:], [Pj(j) - i] + p[j:], [None] + a[j:])
            rhs = rhs + c * d * (s * sign(i))
    for j in range(1, k):
        s = sign(pa(j) + ma(j))
        for i in range(1, M(j + 1)):
            c = L21([i] + rev(m[:j]), rev(p[:j]), [A(j + 1)] + rev(a[:j]))
            d = L21([M(j + 1) - i] + m[j + 1:], p[j:], a[j:])
            rhs = rhs + c * d * (s * sign(i - 1))
    for i in range(1, Pj(1) + 1):
        c = L21([0, M(1)], [i], [None, A(1)])
        d = L21([0] + m[1:], [Pj(1) - i] + p[1:], [None] + a[1:])
        rhs = rhs + c * d * (sign(M(1)) * sign(i - 1))
    s = sign(pa(k) + ma(k))
    for i in range(1, Pj(k) + 1):
        c = L21([0] + rev(m[:k]), [Pj(k) - i] + rev(p[:k - 1]), [None] + rev(a[:k]))
        d = L21([0, M(k + 1)], [i], [None, A(k + 1)])
        rhs = rhs + c * d * (s * sign(i - 1))
    return lhs, rhs


# ---------------------------------------------------------------------------
# word-level reversal


def reversal_sides(letters) -> tuple[Expression, Expression]:
    """g(f_1..f_m) + (-1)^m g(f_m..f_1) and sum_i (-1)^{i-1} g(f_i..f_1) g(f_{i+1}..f_m).

    Only letters dt/(1 - a t) with a != 0, 1 and a <= 1 are accepted so that
    every sub-word integral converges on its own.
    """
    labels = [as_fraction(x) for x in letters]
    check(len(labels) >= 1, "need at least one letter")
    check(all(x != 0 and x != 1 and x <= 1 for x in labels),
          "letters must be dt/(1 - a t) with a != 0, 1 and a <= 1")
    mlen = len(labels)

    def g(seq):
        if not seq:
            return Expression.const(1)
        return Expression.atom(WordIntegral(Word(tuple(Letter(x) for x in seq))))

    lhs = g(labels) + g(labels[::-1]) * sign(mlen)
    rhs = Expression()
    for i in range(1, mlen):
        rhs = rhs + g(labels[:i][::-1]) * g(labels[i:]) * sign(i - 1)
    return lhs, rhs


def _lemma26_grid():
    h, t, mo = Fraction(1, 2), Fraction(1, 3), Fraction(-1)
    return [{"a": x} for x in ([h, h], [h, t], [t, h, mo], [mo, h, t], [h, h, h],
                               [mo, mo, h, t], [t, mo, h, mo, h], [h, t, mo, h, t, mo],
                               [Fraction(-1, 2), t], [Fraction(1, 4), mo, Fraction(-1, 3)])]


@register("LEMMA-2.6", [("a", "rats")], "path reversal for iterated integrals of dt/(1-a t) forms",
          grid=_lemma26_grid)
def gen_lemma26(a) -> IdentityInstance:
    lhs, rhs = reversal_sides(a)
    return IdentityInstance("LEMMA-2.6", {"a": [as_fraction(x) for x in a]}, lhs, rhs)


# ---------------------------------------------------------------------------
# the two log-integral formulas at a single argument


def _neglog_power_word(j: int, a: Fraction, head: Fraction) -> Expression:
    """int_0^1 f(t) (-log(1 - a t))^j dt for f = dt/t (head 0) or dt/(1 - head t).

    (-log(1-a t))^j = j! a^j I_0^t(w_a^j), so the integral is j! a^j I(f w_a^j).
    """
    w = Word((Letter(head),) + (Letter(a),) * j)
    return Expression.atom(WordIntegral(w)) * (factorial(j) * a ** j)


def _b8_grid():
    out = []
    for m1 in (0, 1, 2):
        for m2 in (1, 2):
            for a in (Fraction(-1), Fraction(1, 2), Fraction(-1, 3)):
                out.append({"which": 1, "m1": m1, "m2": m2, "a": a})
    for m1 in (1, 2):
        for m2 in (1, 2):
            out.append({"which": 2, "m1": m1, "m2": m2, "a": Fraction(1, 2)})
            out.append({"which": 2, "m1": m1, "m2": m2, "a": Fraction(-1, 3)})
    # close to the singular end a = 1
    out.append({"which": 1, "m1": 1, "m2": 1, "a": Fraction(9, 10)})
    out.append({"which": 2, "m1": 1, "m2": 2, "a": Fraction(9, 10)})
    return out


@register("EQ-b8", [("which", "int"), ("m1", "int"), ("m2", "int"), ("a", "rat")],
          "polylogs as integrals of products of logarithms", grid=_b8_grid)
def gen_b8(which, m1, m2, a) -> IdentityInstance:
    """The log integrals are expanded binomially in log(1-a) and (-log(1-a t))."""
    a = as_fraction(a)
    check(which in (1, 2), "which must be 1 or 2")
    check(-1 <= a < 1 and a != 0, "a must lie in [-1, 0) or (0, 1)")
    check(m1 >= (0 if which == 1 else 1) and m2 >= 1, "m1 >= 0 (>= 1 for which=2), m2 >= 1")
    # log((1-a)/(1-a t)) = log(1-a) + u with u = -log(1-a t); log(1-a t) = -u
    la = log(1 - a)
    integral = Expression()
    for j in range(m1 + 1):
        c = Fraction(factorial(m1), factorial(j) * factorial(m1 - j)) * sign(m2)
        head = Fraction(0) if which == 1 else -a
        integral = integral + la ** (m1 - j) * _neglog_power_word(j + m2, a, head) * c
    pref = Fraction(sign(m1 + m2), factorial(m1) * factorial(m2))
    if which == 1:
        lhs = li([1] * m1 + [2] + [1] * (m2 - 1), [a] + [1] * (m1 + m2 - 1))
        rhs = integral * pref
    else:
        args = [a] + [1] * (m1 - 1) + [-1, -1] + [1] * (m2 - 1)
        lhs = li([1] * (m1 + m2 + 1), args)
        rhs = integral * (-pref * a)
    return IdentityInstance("EQ-b8", {"which": which, "m1": m1, "m2": m2, "a": a}, lhs, rhs)


__all__ = ["gen_thm22", "gen_thm23", "gen_b4", "gen_thm24", "gen_lemma26", "gen_b8",
           "reversal_sides", "ParameterError", "eq21_index"]
