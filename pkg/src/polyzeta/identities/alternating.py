"""
Alternating MZVs with a log 2 weighted reversal relation, and the
expansion of zeta(1bar, {1}, barred p+1, ...) through series with
1/(n 2^n) weights.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from math import factorial

from ..expression import Expression, PowerSeriesAtom, ky, log
from ..finite import mhss_eval, parametric_star_eval
from ..index import SignedIndex, as_fraction, box_chain, diamond_join, idx
from .common import IdentityInstance, Z, check, ones, register, sign

LOG2 = log(2)


def zchain(head: int, ms, ps) -> Expression:
    """zeta(head, {1}_{m_1-1}, p_1+1, {1}_{m_2-1}, ..., p_r+1, {1}_{m_{r+1}-1})."""
    ms, ps = list(ms), list(ps)
    check(len(ms) == len(ps) + 1, "need one more m than p")
    parts = [head] + list(ones(ms[0] - 1))
    for q, mm in zip(ps, ms[1:]):
        parts += [q + 1] + list(ones(mm - 1))
    return Z(parts)


def _check_mp(m, p):
    k = len(p)
    check(k >= 1 and len(m) == k + 1, "need len(m) == len(p) + 1 >= 2")
    check(all(x >= 1 for x in m) and all(x >= 0 for x in p), "need m_j >= 1, p_i >= 0")


def _small_mp_grid():
    out = []
    for m in ([1, 1], [1, 2], [2, 1], [2, 2]):
        for p in ([0], [1], [2]):
            out.append({"m": m, "p": p})
    for m in ([1, 1, 1], [1, 2, 1], [2, 1, 2]):
        for p in ([0, 1], [1, 0], [1, 1], [2, 1]):
            out.append({"m": m, "p": p})
    return out


# ---------------------------------------------------------------------------
# log 2 weighted reversal

EMPTY_SUM_NOTE = "p_1 = 0: sum over i = 1..-1 taken as minus the i = 0 term"


def _k1_range(p1: int):
    """Summation range of the k = 1 displays, i = 1..p_1-1.

    At p_1 = 0 the two boundary pieces of the reversal overlap in a single
    product; extending sum_{i=a}^{b} = -sum_{i=b+1}^{a-1} gives exactly that
    term, so the range becomes (0,) with a minus sign applied by the caller.
    """
    return range(1, p1) if p1 >= 1 else (0,)


@register("THM-3.1", [("m", "list"), ("p", "list"), ("display", "str")],
          "reversal relation for zeta(1bar, ...) with log 2 weights", grid=_small_mp_grid)
def gen_thm31(m, p, display: str = "auto") -> IdentityInstance:
    """``display`` picks the k = 1 statement ("auto") or forces the general one."""
    m, p = list(m), list(p)
    _check_mp(m, p)
    check(display in ("auto", "general", "k1"), "display must be auto, general or k1")
    k = len(p)
    if display == "k1":
        check(k == 1, "the k = 1 display needs k = 1")
    use_k1 = k == 1 and display != "general"
    pa = lambda j: sum(p[:j])  # noqa: E731
    ma = lambda j: sum(m[:j])  # noqa: E731
    rev = lambda xs: list(reversed(xs))  # noqa: E731
    s = sign(pa(k) + ma(k + 1))

    lhs = Expression()
    for i in range(m[0]):
        lhs = lhs + LOG2 ** i * zchain(-1, [m[0] - i] + m[1:], p) * Fraction(1, factorial(i))
    for i in range(m[k]):
        lhs = lhs + LOG2 ** i * zchain(-1, [m[k] - i] + rev(m[:k]), rev(p)) * Fraction(s, factorial(i))
    lhs = lhs + LOG2 ** m[0] * zchain(-(p[0] + 1), m[1:], p[1:]) * Fraction(1, factorial(m[0]))
    lhs = lhs + LOG2 ** m[k] * zchain(-(p[k - 1] + 1), rev(m[:k]), rev(p[:k - 1])) * Fraction(s, factorial(m[k]))

    rhs = Expression()
    if use_k1:
        # sum_{i=1}^{p_1-1}; for p_1 = 0 the empty range reads as -(term at i = 0)
        notes = [EMPTY_SUM_NOTE] if p[0] == 0 else []
        for i in _k1_range(p[0]):
            t = zchain(-(i + 1), [m[0]], []) * zchain(-(p[0] - i + 1), [m[1]], []) * (sign(m[0]) * sign(i - 1))
            rhs = rhs + (t if i else -t)
        return IdentityInstance("THM-3.1", {"m": m, "p": p, "display": display}, lhs, rhs, notes=notes)

    for j in range(2, k):
        c = sign(pa(j - 1) + ma(j) - 1)
        for i in range(p[j - 1] + 1):
            a = zchain(-(i + 1), rev(m[:j]), rev(p[:j - 1]))
            b = zchain(-(p[j - 1] - i + 1), m[j:], p[j:])
            rhs = rhs + a * b * (c * sign(i))
    for j in range(1, k):
        c = sign(pa(j) + ma(j))
        for i in range(1, m[j]):
            a = zchain(-1, [i] + rev(m[:j]), rev(p[:j]))
            b = zchain(-1, [m[j] - i] + m[j + 1:], p[j:])
            rhs = rhs + a * b * (c * sign(i - 1))
    for i in range(1, p[0] + 1):
        a = zchain(-(p[0] - i + 1), m[1:], p[1:])
        rhs = rhs + a * zchain(-(i + 1), [m[0]], []) * (sign(m[0]) * sign(i - 1))
    c = sign(pa(k) + ma(k))
    for i in range(1, p[k - 1] + 1):
        a = zchain(-(p[k - 1] - i + 1), rev(m[:k]), rev(p[:k - 1]))
        rhs = rhs + a * zchain(-(i + 1), [m[k]], []) * (c * sign(i - 1))
    return IdentityInstance("THM-3.1", {"m": m, "p": p, "display": display}, lhs, rhs)


def _cor32_grid():
    return [{"p": [x]} for x in range(5)] + [{"p": list(q)} for q in product((0, 1, 2), repeat=2)] + \
        [{"p": [1, 0, 1]}, {"p": [1, 1, 1]}, {"p": [2, 0, 1]}]


@register("COR-3.2", [("p", "list")], "log 2 weighted reversal with all m_j = 1", grid=_cor32_grid)
def gen_cor32(p) -> IdentityInstance:
    p = list(p)
    k = len(p)
    check(k >= 1 and all(x >= 0 for x in p), "need p_i >= 0")
    pa = lambda j: sum(p[:j])  # noqa: E731

    def zz(head, tail):
        return Z([head] + [x + 1 for x in tail])

    if k == 1:
        c = 1 + sign(p[0])
        lhs = zz(-1, p) * c + LOG2 * zz(-(p[0] + 1), []) * c
        rhs = Expression()
        for i in _k1_range(p[0]):
            t = zz(-(i + 1), []) * zz(-(p[0] - i + 1), []) * sign(i)
            rhs = rhs + (t if i else -t)
        return IdentityInstance("COR-3.2", {"p": p}, lhs, rhs, notes=[EMPTY_SUM_NOTE] if p[0] == 0 else [])

    s = sign(pa(k) + k - 1)
    rp = p[::-1]
    lhs = (zz(-1, p) + zz(-1, rp) * s + LOG2 * zz(-(p[0] + 1), p[1:])
           + LOG2 * zz(-(p[k - 1] + 1), rp[1:]) * s)
    rhs = Expression()
    for j in range(2, k):
        c = sign(pa(j - 1) + j - 1)
        for i in range(p[j - 1] + 1):
            rhs = rhs + zz(-(i + 1), p[:j - 1][::-1]) * zz(-(p[j - 1] - i + 1), p[j:]) * (c * sign(i))
    for i in range(1, p[0] + 1):
        rhs = rhs - zz(-(i + 1), []) * zz(-(p[0] - i + 1), p[1:]) * sign(i - 1)
    c = sign(pa(k) + k)
    for i in range(1, p[k - 1] + 1):
        rhs = rhs + zz(-(i + 1), []) * zz(-(p[k - 1] - i + 1), rp[1:]) * (c * sign(i - 1))
    return IdentityInstance("COR-3.2", {"p": p}, lhs, rhs)


# ---------------------------------------------------------------------------
# parametric star sums integrated against dt/(1-t)


SERIES_BITS = 480  # tail of the integrated series is kept below 2^-SERIES_BITS


def parametric_star_coeffs(n: int, s) -> list:
    """Coefficients c_q (q = 0..n) of zeta*_n(s; x) = sum_q c_q x^q."""
    s = tuple(s)
    out = [Fraction(0)] * (n + 1)
    if not s:
        out[n] = Fraction(1)
        return out
    # c_q = sum over n >= n_1 >= ... >= n_m = q of prod n_i^{-s_i}
    # = q^{-s_m} * zeta*_n(s_1..s_{m-1}) restricted to n_{m-1} >= q
    head = s[:-1]
    # T[j] = sum over n >= n_1 >= .. >= n_{m-1} >= j of prod n_i^{-s_i}
    T = [Fraction(1)] * (n + 2)
    for e in head:  # outermost first
        new = [Fraction(0)] * (n + 2)
        acc = Fraction(0)
        for j in range(n, 0, -1):
            acc += Fraction(1, j ** e) * T[j]
            new[j] = acc
        T = new
    for q in range(1, n + 1):
        out[q] = Fraction(1, q ** s[-1]) * T[q]
    return out


def integrated_series(n: int, s, p: int, t) -> PowerSeriesAtom:
    """int_{0<t_p<..<t_1<t} dt_1/(1-t_1) .. zeta*_n(s; t_p) dt_p/(1-t_p) as a series in t."""
    t = as_fraction(t)
    check(0 < t < 1, "t must lie in (0, 1)")
    check(p >= 1, "p must be >= 1")
    a = parametric_star_coeffs(n, s)
    C = sum(abs(c) for c in a)
    # each integration maps a_q to b_M = (1/M) sum_{q<M} a_q, so |b_M| <= sum |a_q|
    need = SERIES_BITS + 8 + max(0, math.ceil(math.log2(float(C) + 1))) + math.ceil(-math.log2(1 - float(t)))
    N = n + 2 + math.ceil(need / -math.log2(float(t)))
    coeffs = a + [Fraction(0)] * (N - len(a))
    for _ in range(p):
        new = [Fraction(0)] * N
        acc = Fraction(0)
        for M in range(1, N):
            acc += coeffs[M - 1]
            new[M] = acc / M
        coeffs = new
    label = "J[p={}; n={}; s=({}); t={}]".format(p, n, ",".join(map(str, s)), t)
    return PowerSeriesAtom(label, tuple(coeffs), t, (C, Fraction(1)))


def _lemma33_grid():
    h = Fraction(1, 2)
    return [{"p": 1, "s": [], "n": 1, "t": h}, {"p": 2, "s": [], "n": 2, "t": h},
            {"p": 1, "s": [1], "n": 3, "t": Fraction(1, 3)}, {"p": 2, "s": [2], "n": 3, "t": h},
            {"p": 3, "s": [1, 2], "n": 4, "t": Fraction(2, 3)}, {"p": 2, "s": [2, 1], "n": 5, "t": Fraction(1, 4)},
            {"p": 1, "s": [3, 1, 1], "n": 6, "t": h}, {"p": 4, "s": [1], "n": 2, "t": Fraction(3, 5)},
            {"p": 3, "s": [], "n": 7, "t": Fraction(1, 5)}, {"p": 2, "s": [1, 1], "n": 10, "t": h}]


@register("LEMMA-3.3", [("p", "int"), ("s", "list"), ("n", "int"), ("t", "rat")],
          "iterated dt/(1-t) integrals of a parametric star sum", grid=_lemma33_grid)
def gen_lemma33(p, s, n, t) -> IdentityInstance:
    s = list(s)
    t = as_fraction(t)
    check(p >= 1 and 1 <= n <= 30, "need p >= 1 and 1 <= n <= 30")
    check(all(x >= 1 for x in s), "s entries must be positive")
    lhs = Expression.atom(integrated_series(n, s, p, t))
    # I_q(0) = (-log(1-t))^q / q!
    L = log(1 - t)
    rhs = Expression()
    for j in range(1, p + 1):
        q = p - j + 1
        w = mhss_eval(n, SignedIndex(tuple(s) + (1,) * (j - 1)))
        rhs = rhs + L ** q * (Fraction(sign(j - 1) * sign(q), factorial(q)) * w)
    rhs = rhs + Expression.const(parametric_star_eval(n, SignedIndex(tuple(s) + (1,) * p), t) * sign(p))
    return IdentityInstance("LEMMA-3.3", {"p": p, "s": s, "n": n, "t": t}, lhs, rhs)


# ---------------------------------------------------------------------------
# E_i / F_i and the 1/(n 2^n) expansion


def build_EF(i: int, p, m, primed: bool = False):
    """(E_i, F_i) for the 1/(n 2^n) expansions.

    Unprimed (m = (m_1, .., m_{k+1})):
        E_i = (m_{k+1}+1) box {1}_{p_k-1} box .. box (m_{i+1}+1), E_k = (m_{k+1}+1)
        F_i = {1}_{p_1-1} box (m_2+1) box .. box {1}_{p_{i-1}-1} box (m_i+1), F_1 = empty
    Primed (m = (m_1, .., m_k)):
        E'_i = (m_k+1) box {1}_{p_k-1} box (m_{k-1}+1) .. box (m_i+1)
        F'_i = {1}_{p_1-1} box (m_1+1) box .. box {1}_{p_{i-1}-1} box (m_{i-1}+1)

    F is returned behind a virtual head 0, so ``F[0] == 0`` means the star
    part is ``F[1:]``; when p_1 = 0 the head has absorbed m_2 (or m_1) and
    contributes the factor n^{-F[0]}.  E is ``None`` for i = k + 1.
    """
    p, m = list(p), list(m)
    k = len(p)
    check(1 <= i <= k + 1, f"i must lie in 1..{k + 1}")
    if primed:
        check(len(m) == k, "primed form needs len(m) == len(p)")
        mm = [None] + m  # mm[j] = m_j, 1-based
        if i <= k:
            steps = [(p[q - 1], mm[q - 1] + 1) for q in range(k, i, -1)]
            E = box_chain(mm[k] + 1, steps)
        else:
            E = None
        F = box_chain(0, [(p[q - 1], mm[q] + 1) for q in range(1, i)])
    else:
        check(len(m) == k + 1, "need len(m) == len(p) + 1")
        mm = [None] + m
        if i <= k:
            steps = [(p[q - 1], mm[q] + 1) for q in range(k, i, -1)]
            E = box_chain(mm[k + 1] + 1, steps)
        else:
            E = None
        F = box_chain(0, [(p[q - 1], mm[q + 1] + 1) for q in range(1, i)])
    return E, F


def ky_from_F(kidx: SignedIndex, F, j: int, x) -> Expression:
    """Li(k (*) (0, F, {1}_{j-1})^star; x) with F from :func:`build_EF`."""
    tail = tuple(F) + (1,) * (j - 1)
    if tail[0] == 0:
        return ky(kidx, SignedIndex(tail[1:]), True, x)
    return ky(kidx, SignedIndex(tail), False, x)


def _series_rhs(kidx, p, m, x, primed) -> Expression:
    k = len(p)
    out = Expression()
    for i in range(1, k + 1):
        E, F = build_EF(i, p, m, primed)
        for j in range(1, p[i - 1] + 1):
            zE = Z(E, ones(p[i - 1] - j))
            out = out + zE * ky_from_F(kidx, F, j, x) * (sign(sum(p[:i - 1])) * sign(j - 1))
    _, F = build_EF(k + 1, p, m, primed)
    return out + ky_from_F(kidx, F, 1, x) * sign(sum(p))


def thm34_lhs_index(m, p) -> list:
    parts = [-1] + list(ones(m[0] - 1)) + [-(p[0] + 1)] + list(ones(m[1] - 1))
    for q, mm in zip(p[1:], m[2:]):
        parts += [q + 1] + list(ones(mm - 1))
    return parts


def _thm34_grid():
    out = []
    for m in product((1, 2), repeat=2):
        for p in ((0,), (1,), (2,)):
            out.append({"m": list(m), "p": list(p)})
    for m in product((1, 2), repeat=3):
        for p in product((0, 1, 2), repeat=2):
            out.append({"m": list(m), "p": list(p)})
    return out


@register("THM-3.4", [("m", "list"), ("p", "list")],
          "zeta(1bar, {1}, barred p+1, ...) through MZVs and 1/(n 2^n) series", grid=_thm34_grid)
def gen_thm34(m, p) -> IdentityInstance:
    m, p = list(m), list(p)
    _check_mp(m, p)
    lhs = Z(thm34_lhs_index(m, p)) * sign(m[0])
    kidx = SignedIndex((1,) * m[0])
    rhs = _series_rhs(kidx, p, m, Fraction(1, 2), False)
    return IdentityInstance("THM-3.4", {"m": m, "p": p}, lhs, rhs)


@register("COR-3.5", [("m", "list"), ("p", "list")], "the two-block case of the 1/(n 2^n) expansion",
          grid=lambda: [g for g in _thm34_grid() if len(g["p"]) == 2])
def gen_cor35(m, p) -> IdentityInstance:
    """Written out block by block rather than through build_EF."""
    m, p = list(m), list(p)
    check(len(m) == 3 and len(p) == 2, "need m = (m1, m2, m3), p = (p1, p2)")
    _check_mp(m, p)
    m1, m2, m3 = m
    p1, p2 = p
    kidx = SignedIndex((1,) * m1)
    h = Fraction(1, 2)
    lhs = Z(-1, ones(m1 - 1), -(p1 + 1), ones(m2 - 1), p2 + 1, ones(m3 - 1)) * sign(m1)
    rhs = Expression()
    E1 = box_chain(m3 + 1, [(p2, m2 + 1)])
    for j in range(1, p1 + 1):
        rhs = rhs + Z(E1, ones(p1 - j)) * ky_from_F(kidx, (0,), j, h) * sign(j - 1)
    F2 = box_chain(0, [(p1, m2 + 1)])
    for j in range(1, p2 + 1):
        rhs = rhs + Z(m3 + 1, ones(p2 - j)) * ky_from_F(kidx, F2, j, h) * (sign(p1) * sign(j - 1))
    F3 = box_chain(0, [(p1, m2 + 1), (p2, m3 + 1)])
    rhs = rhs + ky_from_F(kidx, F3, 1, h) * sign(p1 + p2)
    return IdentityInstance("COR-3.5", {"m": m, "p": p}, lhs, rhs)


@register("COR-3.6", [("m", "list"), ("p", "list")], "the three-block case of the 1/(n 2^n) expansion",
          grid=lambda: [{"m": list(m), "p": list(q)} for m in ([1, 1, 1, 1], [1, 2, 1, 1], [2, 1, 1, 2])
                        for q in ([0, 1, 1], [1, 0, 1], [1, 1, 0], [1, 1, 1], [2, 0, 1])])
def gen_cor36(m, p) -> IdentityInstance:
    m, p = list(m), list(p)
    check(len(m) == 4 and len(p) == 3, "need four m's and three p's")
    _check_mp(m, p)
    m1, m2, m3, m4 = m
    p1, p2, p3 = p
    kidx = SignedIndex((1,) * m1)
    h = Fraction(1, 2)
    lhs = Z(-1, ones(m1 - 1), -(p1 + 1), ones(m2 - 1), p2 + 1, ones(m3 - 1), p3 + 1, ones(m4 - 1)) * sign(m1)
    rhs = Expression()
    E1 = box_chain(m4 + 1, [(p3, m3 + 1), (p2, m2 + 1)])
    for j in range(1, p1 + 1):
        rhs = rhs + Z(E1, ones(p1 - j)) * ky_from_F(kidx, (0,), j, h) * sign(j - 1)
    E2 = box_chain(m4 + 1, [(p3, m3 + 1)])
    F2 = box_chain(0, [(p1, m2 + 1)])
    for j in range(1, p2 + 1):
        rhs = rhs + Z(E2, ones(p2 - j)) * ky_from_F(kidx, F2, j, h) * (sign(p1) * sign(j - 1))
    F3 = box_chain(0, [(p1, m2 + 1), (p2, m3 + 1)])
    for j in range(1, p3 + 1):
        rhs = rhs + Z(m4 + 1, ones(p3 - j)) * ky_from_F(kidx, F3, j, h) * (sign(p1 + p2) * sign(j - 1))
    F4 = box_chain(0, [(p1, m2 + 1), (p2, m3 + 1), (p3, m4 + 1)])
    rhs = rhs + ky_from_F(kidx, F4, 1, h) * sign(p1 + p2 + p3)
    return IdentityInstance("COR-3.6", {"m": m, "p": p}, lhs, rhs)


# ---------------------------------------------------------------------------
# the barred-block generalisation


def thm51_lhs_index(kk, m, p) -> list:
    """(1bar, cat_{j<r} 1bar<>{1}_{k_j-1}<>1bar, 1bar<>{1}_{k_r-1}<>(p_1+1), ...)."""
    r = len(kk)
    parts = [-1]
    for j in range(r - 1):
        parts += list(diamond_join(-1, kk[j], -1))
    parts += list(diamond_join(-1, kk[r - 1], p[0] + 1))
    for q, mm in zip(p[1:], m[1:-1]):
        parts += list(ones(mm - 1)) + [q + 1]
    parts += list(ones(m[-1] - 1))
    return parts


def _thm51_grid():
    out = []
    for kk in ([0], [1], [2], [0, 1], [1, 0], [1, 1]):
        for m, p in (([1, 1], [1]), ([1, 2], [2]), ([1, 1, 1], [1, 1]), ([1, 1, 2], [0, 1])):
            out.append({"k": kk, "m": m, "p": p})
    return out


@register("THM-5.1", [("k", "list"), ("m", "list"), ("p", "list")],
          "barred-block alternating MZVs through Kaneko-Yamamoto series at 1/2", grid=_thm51_grid)
def gen_thm51(k, m, p) -> IdentityInstance:
    """``m`` is (m_1, m_2, .., m_{k+1}); m_1 only fixes the length and is not used.

    The word is wbar w^{k_1} .. wbar w^{k_r} Omega^{p_1} w^{m_2} .. Omega^{p_k} w^{m_{k+1}}.
    """
    kk, m, p = list(k), list(m), list(p)
    r = len(kk)
    check(r >= 1 and all(x >= 0 for x in kk), "need r >= 1 and k_i >= 0")
    _check_mp(m, p)
    lhs = Z(thm51_lhs_index(kk, m, p)) * sign(r)
    kidx = SignedIndex(tuple(x + 1 for x in reversed(kk)))
    rhs = _series_rhs(kidx, p, m, Fraction(1, 2), False)
    return IdentityInstance("THM-5.1", {"k": kk, "m": m, "p": p}, lhs, rhs)


__all__ = ["gen_thm31", "gen_cor32", "gen_lemma33", "gen_thm34", "gen_cor35", "gen_cor36",
           "gen_thm51", "build_EF", "ky_from_F", "zchain", "integrated_series",
           "parametric_star_coeffs", "thm34_lhs_index", "thm51_lhs_index", "idx"]
