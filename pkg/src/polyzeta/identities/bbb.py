"""
Alternating MZVs with a barred head written through unit-exponent
alternating MZVs (entries +-1 only), together with the values of the star
polylogarithm at 1/2 that appear along the way.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..expression import Expression, li_star
from .common import (IdentityInstance, LI, Z, check, diamond, ones, register, sign)

B = -1  # a barred 1


def _mn_grid():
    return [{"m": m, "n": n} for m in range(3) for n in range(3)]


def _bbb41(m, n):
    lhs = Z(B, ones(m), 2, ones(n))
    rhs = Z(B, ones(n), B, B, ones(m)) - Z(B, ones(m + n + 2))
    return lhs, rhs


def _bbb42(m, n):
    lhs = Z(B, B, ones(m), 2, ones(n))
    rhs = (Z(B, B, ones(n), B, B, ones(m)) - Z(B, B, ones(m + n + 2))
           + Z(B, B, ones(m)) * Z(n + 2))
    return lhs, rhs


def _bbb43(m, n):
    lhs = Z(B, ones(m), 2, 2, ones(n))
    rhs = (Z(B, ones(n), B, B, B, B, ones(m)) + Z(B, ones(m + n + 4))
           - Z(B, ones(n + 2), B, B, ones(m)) - Z(B, ones(n), B, B, ones(m + 2)))
    return lhs, rhs


def _bbb44(m, n):
    lhs = Z(B, B, ones(m), 2, 2, ones(n))
    rhs = (Z(B, B, ones(n), B, B, B, B, ones(m)) + Z(B, B, ones(m + n + 4))
           - Z(B, B, ones(n + 2), B, B, ones(m)) - Z(B, B, ones(n), B, B, ones(m + 2))
           + Z(B, B, ones(m), 2) * Z(n + 2)
           - Z(B, B, ones(m)) * (Z(n + 4) + Z(2, n + 2)))
    return lhs, rhs


_BBB = {1: _bbb41, 2: _bbb42, 3: _bbb43, 4: _bbb44}


def gen_bbb(case: int, m: int, n: int) -> IdentityInstance:
    check(case in _BBB, f"case must be 1..4, got {case}")
    check(m >= 0 and n >= 0, "m, n must be >= 0")
    lhs, rhs = _BBB[case](m, n)
    return IdentityInstance(f"BBB-4.{case}", {"m": m, "n": n}, lhs, rhs)


def _register_bbb(case):
    def gen(m, n):
        return gen_bbb(case, m, n)
    gen.__name__ = f"gen_bbb{case}"
    register(f"BBB-4.{case}", [("m", "int"), ("n", "int")],
             f"conjectured relation {case} of four for zeta(1bar, ...) with 2's", grid=_mn_grid)(gen)


for _c in _BBB:
    _register_bbb(_c)


# ---------------------------------------------------------------------------
# substring sign sums


def substrings(m: int):
    """All 2^m sign strings S_k of length m with eps_k = prod_{0 <= i < m/2} sigma_{m-2i}."""
    check(m >= 0, "m must be >= 0")
    out = []
    for S in product((1, -1), repeat=m):
        eps = 1
        i = 0
        while 2 * i < m:
            eps *= S[m - 2 * i - 1]
            i += 1
        out.append((S, eps))
    return out


def substring_sum(head: tuple, n: int, m: int) -> Expression:
    """sum_k eps_k zeta(head, {1}_n, S_k)."""
    out = Expression()
    for S, eps in substrings(m):
        out = out + Z(head, ones(n), S) * eps
    return out


def gen_substring_sum(which: str, m: int, n: int) -> IdentityInstance:
    check(which in ("a1", "a2"), "which must be a1 or a2")
    check(m >= 0 and n >= 0, "m, n must be >= 0")
    if which == "a1":
        lhs = Z(-(m + 1), ones(n))
        rhs = substring_sum((B,), n, m) * sign(m)
        notes = []
    else:
        lhs = Z(B, -(m + 1), ones(n))
        rhs = substring_sum((B, B), n, m) * sign(m)
        for p in range(1, m + 1):
            rhs = rhs - Z(m - p + 2, ones(n)) * Z(-p) * sign(p)
        notes = ["zeta(pbar) = sum (-1)^k / k^p, so zeta(1bar) = -log 2"] if m else []
    return IdentityInstance(f"BBB-{which}", {"m": m, "n": n}, lhs, rhs, notes=notes)


def _sub_grid():
    return [{"m": m, "n": n} for m in range(4) for n in range(3)]


register("BBB-a1", [("m", "int"), ("n", "int")],
         "zeta(barred m+1, {1}_n) as an eps-signed substring sum", grid=_sub_grid)(
    lambda m, n: gen_substring_sum("a1", m, n))
register("BBB-a2", [("m", "int"), ("n", "int")],
         "zeta(1bar, barred m+1, {1}_n) as an eps-signed substring sum plus products",
         grid=_sub_grid)(lambda m, n: gen_substring_sum("a2", m, n))


# ---------------------------------------------------------------------------
# general 2-insertions at -1 and their corollaries


def _ms_grid(k):
    def grid():
        out = []
        for ms in product((1, 2), repeat=k + 1):
            out.append({"m": list(ms)})
        return out
    return grid


@register("EQ-4.5", [("m", "list")],
          "zeta(1bar, {1}, 2, ..., 2, {1}) as a sigma-signed sum of unit-exponent values",
          grid=lambda: _ms_grid(1)() + _ms_grid(2)() + [{"m": [1, 1, 1, 1]}, {"m": [2, 1, 1, 2]}])
def gen_eq45(m) -> IdentityInstance:
    m = list(m)
    k = len(m) - 1
    check(k >= 1 and all(x >= 1 for x in m), "need at least two m_j, all >= 1")
    parts = [B] + list(ones(m[0] - 1))
    for j in range(1, k + 1):
        parts += [2] + list(ones(m[j] - 1))
    lhs = Z(parts)
    rhs = Expression()
    for sig in product((1, -1), repeat=k):
        args = [-1] + [1] * (m[k] - 1)
        for j in range(k):
            args += [sig[j], sig[j]] + [1] * (m[k - 1 - j] - 1)
        den = sign(k)
        for s in sig:
            den *= s
        rhs = rhs + LI([1] * (sum(m) + k), args) * den
    return IdentityInstance("EQ-4.5", {"m": m}, lhs, rhs)


@register("EQ-4.6", [("m", "list")], "two 2-insertions after a barred 1", grid=_ms_grid(2))
def gen_eq46(m) -> IdentityInstance:
    m = list(m)
    check(len(m) == 3 and all(x >= 1 for x in m), "need m = (m1, m2, m3), all >= 1")
    m1, m2, m3 = m
    lhs = Z(B, ones(m1 - 1), 2, ones(m2 - 1), 2, ones(m3 - 1))
    rhs = (Z(B, ones(m3 - 1), B, B, ones(m2 - 1), B, B, ones(m1 - 1)) + Z(B, ones(m1 + m2 + m3 + 1))
           - Z(B, ones(m3 - 1), B, B, ones(m1 + m2)) - Z(B, ones(m3 + m2), B, B, ones(m1 - 1)))
    return IdentityInstance("EQ-4.6", {"m": m}, lhs, rhs)


def _pair_grid():
    return [{"m2": a, "m3": b} for a in (1, 2, 3) for b in (1, 2, 3)]


@register("EQ-4.7", [("m2", "int"), ("m3", "int")],
          "zeta(1bar, 1bar, {1}, 2, {1}) through polylogs at 1/2", grid=_pair_grid)
def gen_eq47(m2, m3) -> IdentityInstance:
    check(m2 >= 1 and m3 >= 1, "m2, m3 must be >= 1")
    half = Fraction(1, 2)
    lhs = Z(B, B, ones(m2 - 1), 2, ones(m3 - 1))
    rhs = (Z(m3 + 1) * Z(B, B, ones(m2 - 1)) + LI([m2 + 1, m3 + 1], [half, 1])
           + LI([m2 + m3 + 2], [half]))
    return IdentityInstance("EQ-4.7", {"m2": m2, "m3": m3}, lhs, rhs)


def _p_grid():
    out = [{"p": [a]} for a in (1, 2, 3, 4)]
    out += [{"p": [a, b]} for a in (1, 2, 3) for b in (1, 2)]
    out += [{"p": [1, 1, 1]}, {"p": [2, 1, 1]}, {"p": [1, 2, 1]}]
    return out


@register("EQ-4.8", [("p", "list")], "Li_{p+1}(1/2) as a unit-exponent alternating MZV", grid=_p_grid)
def gen_eq48(p) -> IdentityInstance:
    p = list(p)
    check(len(p) >= 1 and all(x >= 1 for x in p), "need p_j >= 1")
    k = len(p)
    half = Fraction(1, 2)
    lhs = LI([x + 1 for x in p], [half] + [1] * (k - 1))
    parts: list = []
    for q in reversed(p):
        parts += [B, B] + list(ones(q - 1))
    rhs = Z(parts) * sign(k)
    return IdentityInstance("EQ-4.8", {"p": p}, lhs, rhs)


@register("EQ-4.9", [("m", "list")], "two 2-insertions after two barred 1's",
          grid=lambda: [{"m": list(x)} for x in product((1, 2), repeat=3)])
def gen_eq49(m) -> IdentityInstance:
    m = list(m)
    check(len(m) == 3 and all(x >= 1 for x in m), "need m = (m2, m3, m4), all >= 1")
    m2, m3, m4 = m
    lhs = Z(B, B, ones(m2 - 1), 2, ones(m3 - 1), 2, ones(m4 - 1))
    rhs = (Z(B, B, ones(m4 - 1), B, B, ones(m3 - 1), B, B, ones(m2 - 1))
           + Z(B, B, ones(m2 + m3 + m4 + 1))
           - Z(B, B, ones(m3 + m4), B, B, ones(m2 - 1))
           - Z(B, B, ones(m4 - 1), B, B, ones(m2 + m3))
           + Z(B, B, ones(m2 - 1), 2, ones(m3 - 1)) * Z(m4 + 1)
           - Z(B, B, ones(m2 - 1)) * (Z(m3 + m4 + 2) + Z(m3 + 1, m4 + 1)))
    return IdentityInstance("EQ-4.9", {"m": m}, lhs, rhs)


@register("EQ-4.10", [("m", "int"), ("n", "int")],
          "zeta(1bar, barred m+1, {1}_n) through a star polylog at 1/2",
          grid=lambda: [{"m": m, "n": n} for m in range(1, 4) for n in range(3)])
def gen_eq410(m, n) -> IdentityInstance:
    check(m >= 1 and n >= 0, "need m >= 1, n >= 0")
    lhs = Z(B, -(m + 1), ones(n))
    rhs = Expression()
    for j in range(1, m + 1):
        rhs = rhs + Z(-j) * Z(n + 2, ones(m - j)) * sign(j - 1)
    rhs = rhs - li_star([1] * m + [n + 2], Fraction(1, 2)) * sign(m)
    return IdentityInstance("EQ-4.10", {"m": m, "n": n}, lhs, rhs)


def listar_half_expansion(k) -> Expression:
    """Li*_k(1/2) as a sigma-signed sum of unit-exponent polylogs at +-1."""
    k = list(k)
    r = len(k)
    check(r >= 1 and all(x >= 1 for x in k), "need k_j >= 1")
    out = Expression()
    for free in product((1, -1), repeat=r - 1):
        sig = list(free) + [-1]  # sigma_1 .. sigma_r, sigma_r = -1

        def S(j):
            return sig[j - 1]

        args = [Fraction(-1)]
        for j in range(r - 1):
            args += diamond(Fraction(1, S(r - j)), k[r - j - 1] - 1, S(r - j - 1))
        if k[0] >= 2:
            args += [Fraction(S(1))] + [Fraction(1)] * (k[0] - 2)
        den = 1
        for s in free:
            den *= s
        out = out - LI([1] * sum(k), args) * den
    return out


@register("LISTAR-HALF", [("k", "list")], "star polylog at 1/2 as unit-exponent alternating values",
          grid=lambda: [{"k": k} for k in ([1], [2], [3], [1, 1], [1, 2], [2, 1], [2, 2], [3, 1],
                                            [1, 1, 2], [1, 2, 1], [2, 1, 2], [1, 1, 1, 3])])
def gen_listar_half(k) -> IdentityInstance:
    k = list(k)
    lhs = li_star(k, Fraction(1, 2))
    rhs = listar_half_expansion(k)
    return IdentityInstance("LISTAR-HALF", {"k": k}, lhs, rhs)


@register("EQ-4.14", [("m", "int"), ("n", "int")],
          "Li*_{{1}_m, n+2}(1/2) as an eps-signed substring sum",
          grid=lambda: [{"m": m, "n": n} for m in range(4) for n in range(3)])
def gen_eq414(m, n) -> IdentityInstance:
    check(m >= 0 and n >= 0, "need m, n >= 0")
    lhs = li_star([1] * m + [n + 2], Fraction(1, 2))
    rhs = -substring_sum((B, B), n, m)
    return IdentityInstance("EQ-4.14", {"m": m, "n": n}, lhs, rhs)


@register("REL-2bar", [("which", "int"), ("m", "int"), ("n", "int")],
          "zeta(2bar, ...) through unit-exponent alternating values",
          grid=lambda: ([{"which": 1, "m": m, "n": 1} for m in (1, 2, 3, 4)]
                        + [{"which": 2, "m": m, "n": n} for m in (1, 2) for n in (1, 2, 3)]))
def gen_rel_2bar(which, m, n=1) -> IdentityInstance:
    check(which in (1, 2), "which must be 1 or 2")
    check(m >= 1 and n >= 1, "need m, n >= 1")
    if which == 1:
        lhs = Z(-2, ones(m - 1))
        rhs = Z(B, ones(m - 1), B) - Z(B, ones(m))
    else:
        lhs = Z(-2, ones(m - 1), 2, ones(n - 1))
        rhs = (Z(B, ones(m + n + 1)) + Z(B, ones(n - 1), B, B, ones(m - 1), B)
               - Z(B, ones(n - 1), B, B, ones(m)) - Z(B, ones(m + n), B))
    return IdentityInstance("REL-2bar", {"which": which, "m": m, "n": n}, lhs, rhs)


__all__ = ["gen_bbb", "gen_substring_sum", "substrings", "substring_sum", "gen_eq45", "gen_eq46",
           "gen_eq47", "gen_eq48", "gen_eq49", "gen_eq410", "gen_listar_half", "gen_eq414",
           "listar_half_expansion", "gen_rel_2bar"]
