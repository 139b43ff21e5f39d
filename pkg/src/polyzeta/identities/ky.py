"""
Kaneko-Yamamoto values zeta(k (*) l^star) and the MZVs

    zeta(k^v, (p box m)^v) = I(Omega w^{k_1} .. Omega w^{k_r} Omega^{p_1} w^{m_1} .. Omega^{p_k} w^{m_k})

that they are tied to.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from ..expression import Expression, ky
from ..index import SignedIndex, box_chain
from .alternating import _series_rhs, build_EF  # noqa: F401  (build_EF re-exported)
from .common import IdentityInstance, Z, check, ones, register, sign


def k_vee(kk) -> tuple:
    """k^v = (2 box {1}_{k_1-1} box .. box 2, {1}_{k_r-1})."""
    kk = list(kk)
    check(len(kk) >= 1 and kk[-1] >= 1 and all(x >= 0 for x in kk), "need k_r >= 1, k_i >= 0")
    return box_chain(2, [(x, 2) for x in kk[:-1]]) + ones(kk[-1] - 1)


def pm_vee(p, m) -> tuple:
    """(p box m)^v = (p_1+1 box {1}_{m_1-1} box .. box p_k+1, {1}_{m_k-1}); empty for k = 0."""
    p, m = list(p), list(m)
    check(len(p) == len(m), "need len(p) == len(m)")
    if not p:
        return ()
    check(m[-1] >= 1 and all(x >= 0 for x in m) and all(x >= 0 for x in p), "need m_k >= 1, m_j, p_i >= 0")
    return box_chain(p[0] + 1, [(m[i], p[i + 1] + 1) for i in range(len(p) - 1)]) + ones(m[-1] - 1)


def k_arrow(kk) -> SignedIndex:
    """(k_r+1, .., k_1+1)."""
    return SignedIndex(tuple(x + 1 for x in reversed(kk)))


def ky0(kk, tail) -> Expression:
    """zeta((k_r+1, .., k_1+1) (*) (0, tail)^star)."""
    return ky(k_arrow(kk), SignedIndex(tuple(tail)), True)


def _check_k(kk):
    check(len(kk) >= 1 and kk[-1] >= 1 and all(x >= 0 for x in kk), "need k_r >= 1, other k_i >= 0")


# ---------------------------------------------------------------------------
# the expansion through E'_i, F'_i


def _thm52_grid():
    out = []
    for kk in ([1], [2], [0, 1], [1, 1], [1, 2]):
        for p, m in (([1], [1]), ([2], [1]), ([0], [2]), ([1, 1], [0, 1]), ([1, 0], [1, 1]), ([2, 1], [1, 2])):
            out.append({"k": kk, "p": p, "m": m})
    return out


@register("THM-5.2", [("k", "list"), ("p", "list"), ("m", "list")],
          "zeta(k^v, (p box m)^v) through Kaneko-Yamamoto values", grid=_thm52_grid)
def gen_thm52(k, p, m) -> IdentityInstance:
    kk, p, m = list(k), list(p), list(m)
    _check_k(kk)
    check(len(p) >= 1 and len(p) == len(m), "need len(p) == len(m) >= 1")
    check(m[-1] >= 1 and all(x >= 0 for x in m) and all(x >= 0 for x in p), "need m_k >= 1, m_j, p_i >= 0")
    lhs = Z(k_vee(kk), pm_vee(p, m))
    rhs = _series_rhs(k_arrow(kk), p, m, Fraction(1), True)
    return IdentityInstance("THM-5.2", {"k": kk, "p": p, "m": m}, lhs, rhs)


def _cor53_rhs(kk, m) -> Expression:
    k = len(m)
    out = Expression()
    for i in range(1, k + 1):
        a = Z([x + 1 for x in reversed(m[i - 1:])])  # (m_k+1, .., m_i+1)
        out = out + a * ky0(kk, [x + 1 for x in m[:i - 1]]) * sign(i - 1)
    return out + ky0(kk, [x + 1 for x in m]) * sign(k)


@register("COR-5.3", [("k", "list"), ("m", "list")], "the p = (1, .., 1) case of the k^v expansion",
          grid=lambda: [{"k": kk, "m": m} for kk in ([1], [2], [0, 1], [1, 1])
                        for m in ([1], [2], [0, 1], [1, 1], [1, 0, 1])])
def gen_cor53(k, m) -> IdentityInstance:
    kk, m = list(k), list(m)
    _check_k(kk)
    check(len(m) >= 1 and m[-1] >= 1 and all(x >= 0 for x in m), "need m_k >= 1, other m_j >= 0")
    lhs = Z(k_vee(kk), pm_vee([1] * len(m), m))
    return IdentityInstance("COR-5.3", {"k": kk, "m": m}, lhs, _cor53_rhs(kk, m))


# ---------------------------------------------------------------------------
# triangular inversion


def forward_lemma54(A, B) -> list:
    """C_p = sum_{j<=p} (-1)^{j+1} A_{j,p} B_j for p = 1..len(B) (1-based tables)."""
    n = len(B) - 1
    return [None] + [sum(sign(j + 1) * _a(A, j, p) * B[j] for j in range(1, p + 1)) for p in range(1, n + 1)]


def solve_lemma54(A, C) -> list:
    """B by forward substitution: B_p = (-1)^{p+1} (C_p - sum_{j<p} (-1)^{j+1} A_{j,p} B_j)."""
    n = len(C) - 1
    B = [None] * (n + 1)
    for p in range(1, n + 1):
        acc = C[p]
        for j in range(1, p):
            acc -= sign(j + 1) * _a(A, j, p) * B[j]
        B[p] = sign(p + 1) * acc
    return B


def _a(A, j, p):
    if j == p:
        return 1
    try:
        return A[j][p]
    except (KeyError, IndexError, TypeError):
        raise ValueError(f"missing table entry A[{j}][{p}]") from None


def chain_weight(A, j: int, p: int):
    """sum_{l=1}^{p-j} (-1)^l sum over chains j = i_0 < .. < i_l = p of prod A_{i_{h-1}, i_h}; 1 if j = p."""
    if j == p:
        return 1
    total = 0
    inner = list(range(j + 1, p))
    for l in range(1, p - j + 1):
        for mid in combinations(inner, l - 1):
            chain = (j,) + mid + (p,)
            prod = 1
            for a, b in zip(chain, chain[1:]):
                prod = prod * _a(A, a, b)
            total += sign(l) * prod
    return total


def invert_lemma54(A, C) -> list:
    """B_p = (-1)^{p+1} sum_j C_j * chain_weight(j, p); 1-based lists with a None at index 0.

    ``A`` is indexed A[j][p] for j < p (a dict of dicts or a nested list);
    the diagonal is 1 and need not be given.
    """
    if len(C) < 1 or C[0] is not None:
        C = [None] + list(C)
    n = len(C) - 1
    return [None] + [sign(p + 1) * sum(C[j] * chain_weight(A, j, p) for j in range(1, p + 1))
                     for p in range(1, n + 1)]


def random_lemma54_tables(n: int, rng: random.Random):
    A = {j: {p: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for p in range(j + 1, n + 1)}
         for j in range(1, n + 1)}
    C = [None] + [Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(n)]
    return A, C


@register("LEMMA-5.4", [("n", "int"), ("seed", "int")],
          "triangular inversion, checked exactly on random rational tables",
          grid=lambda: [{"n": n, "seed": s} for n in range(1, 9) for s in (0, 1)])
def gen_lemma54(n, seed=0) -> IdentityInstance:
    check(1 <= n <= 12, "n must lie in 1..12")
    A, C = random_lemma54_tables(n, random.Random(seed))
    B = invert_lemma54(A, C)
    back = forward_lemma54(A, B)
    # zeta(p+1) serves only as a formal basis vector for component p
    lhs, rhs = Expression(), Expression()
    for q in range(1, n + 1):
        lhs = lhs + Z(q + 1) * back[q]
        rhs = rhs + Z(q + 1) * C[q]
    return IdentityInstance("LEMMA-5.4", {"n": n, "seed": seed}, lhs, rhs, mode="exact")


# ---------------------------------------------------------------------------
# Kaneko-Yamamoto values through MZVs


def thm55_expansion(kk, m) -> Expression:
    """zeta((k_r+1..k_1+1) (*) (0, m_1+1..m_k+1)^star) as a polynomial in MZVs."""
    kk, m = list(kk), list(m)
    _check_k(kk)
    check(all(x >= 1 for x in m), "need m_j >= 1")
    k = len(m)

    def A(j, p):  # zeta(m_{p-1}+1, .., m_j+1)
        return Z([x + 1 for x in reversed(m[j - 1:p - 1])])

    table = {j: {p: A(j, p) for p in range(j + 1, k + 2)} for j in range(1, k + 2)}
    out = Expression()
    for j in range(1, k + 2):
        C = Z(k_vee(kk), pm_vee([1] * (j - 1), m[:j - 1]))
        out = out + C * chain_weight(table, j, k + 1)
    return out * sign(k)


def _thm55_grid():
    return [{"k": kk, "m": m} for kk in ([1], [2], [0, 1], [1, 1], [1, 2], [2, 1])
            for m in ([], [1], [2], [1, 1], [2, 1], [1, 1, 1])]


@register("THM-5.5", [("k", "list"), ("m", "list")],
          "Kaneko-Yamamoto values with a zero head as polynomials in MZVs", grid=_thm55_grid)
def gen_thm55(k, m, r=None, kdepth=None) -> IdentityInstance:
    """``r`` and ``kdepth`` optionally pin len(k) and len(m)."""
    kk, m = list(k), list(m)
    if r is not None:
        check(r == len(kk), "r must equal len(k)")
    if kdepth is not None:
        check(kdepth == len(m), "kdepth must equal len(m)")
    lhs = ky0(kk, [x + 1 for x in m])
    rhs = thm55_expansion(kk, m)
    return IdentityInstance("THM-5.5", {"k": kk, "m": m}, lhs, rhs)


@register("KY-EXAMPLE", [], "zeta((3,2) (*) (0,2,2)^star) in single zeta values", grid=lambda: [{}])
def gen_ky_example() -> IdentityInstance:
    lhs = thm55_expansion([1, 2], [1, 1])
    rhs = (Z(9) * Fraction(455, 16) - Z(2) * Z(7) * Fraction(441, 16)
           + Z(3) * Z(6) * Fraction(147, 16) + Z(4) * Z(5) * Fraction(45, 8))
    return IdentityInstance("KY-EXAMPLE", {}, lhs, rhs)


@register("KY-DISPLAY", [("k", "list"), ("m", "list")],
          "the depth (1,2) and (2,2) cases written out",
          grid=lambda: [{"k": kk, "m": m} for kk in ([0, 1], [1, 1], [2, 1], [1, 2], [0, 2])
                        for m in ([1], [2], [1, 1], [2, 1], [1, 2])])
def gen_ky_display(k, m) -> IdentityInstance:
    """k = (k_1, k_2), m = (m_1) or (m_1, m_2)."""
    kk, m = list(k), list(m)
    check(len(kk) == 2 and kk[0] >= 0 and kk[1] >= 1, "need k = (k_1, k_2), k_1 >= 0, k_2 >= 1")
    check(len(m) in (1, 2) and all(x >= 1 for x in m), "need one or two m_j >= 1")
    k1, k2 = kk
    head = box_chain(2, [(k1, 2)]) + ones(k2 - 1)
    lhs = ky0(kk, [x + 1 for x in m])
    if len(m) == 1:
        (m1,) = m
        rhs = Z(m1 + 1) * Z(k2 + 1, k1 + 1) - Z(head, 2, ones(m1 - 1))
    else:
        m1, m2 = m
        rhs = (Z(head, box_chain(2, [(m1, 2)]), ones(m2 - 1))
               + (Z(m2 + 1) * Z(m1 + 1) - Z(m2 + 1, m1 + 1)) * Z(k2 + 1, k1 + 1)
               - Z(m2 + 1) * Z(head, 2, ones(m1 - 1)))
    return IdentityInstance("KY-DISPLAY", {"k": kk, "m": m}, lhs, rhs)


@register("KY-REDUCTION", [("which", "int"), ("m", "int"), ("r", "int"), ("k", "int")],
          "the all-equal case, zeta({2,{1}_{m-1}}_{r+k})",
          grid=lambda: [{"which": w, "m": m, "r": r, "k": k} for w in (1, 2) for m in (1, 2)
                        for r in (1, 2) for k in (0, 1, 2)])
def gen_ky_reduction(which, m, r, k) -> IdentityInstance:
    """which = 1: the signed sum of Kaneko-Yamamoto values; which = 2: zeta({m+1}_{r+k})."""
    check(which in (1, 2), "which must be 1 or 2")
    check(m >= 1 and r >= 1 and k >= 0, "need m, r >= 1, k >= 0")
    block = [2] + [1] * (m - 1)
    lhs = Z(block * (r + k))
    if which == 1:
        rhs = Expression()
        kk = [m] * r
        for i in range(1, k + 2):
            rhs = rhs + Z([m + 1] * (k + 1 - i)) * ky0(kk, [m + 1] * (i - 1)) * sign(i - 1)
    else:
        rhs = Z([m + 1] * (r + k))
    return IdentityInstance("KY-REDUCTION", {"which": which, "m": m, "r": r, "k": k}, lhs, rhs)


__all__ = ["k_vee", "pm_vee", "k_arrow", "ky0", "gen_thm52", "gen_cor53", "forward_lemma54",
           "solve_lemma54", "invert_lemma54", "chain_weight", "gen_lemma54", "thm55_expansion",
           "gen_thm55", "gen_ky_example", "gen_ky_display", "gen_ky_reduction", "build_EF",
           "random_lemma54_tables"]
