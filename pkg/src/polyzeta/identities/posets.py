"""
Integral = series identities on two-column posets, and the two depth-three
relations they give for (alpha_1, alpha_2) = (1, 1) and (-1, 1).
"""

from __future__ import annotations

from fractions import Fraction

from ..expression import Expression, LiXi, PosetIntegral, ky
from ..index import SignedIndex
from ..poset import integral_series_poset
from .common import IdentityInstance, Z, check, register


def cumulative_signs(k: SignedIndex) -> list:
    """alpha'_j = alpha_1 .. alpha_j."""
    out, acc = [], 1
    for s in k.signs:
        acc *= s
        out.append(acc)
    return out


def _signed(parts) -> SignedIndex:
    return SignedIndex(tuple(int(x) for x in parts))


def _eq521_grid():
    out = []
    for k in ([1], [-1], [2], [-2], [1, 1], [-1, 1], [1, -1], [-1, -1], [2, -1], [-1, 1, 1]):
        for l in ([1], [2], [1, 1], [1, 2]):
            if len(k) + len(l) <= 4 and sum(map(abs, k)) + sum(l) <= 6:
                out.append({"k": k, "l": l})
    return out


@register("EQ-5.21", [("k", "list"), ("l", "list")],
          "poset integral of the two-column diagram = signed Kaneko-Yamamoto value", grid=_eq521_grid)
def gen_integral_series(k, l) -> IdentityInstance:
    ks, ls = _signed(k), _signed(l)
    check(ks.depth >= 1 and ls.depth >= 1, "need non-empty k and l")
    check(all(x > 0 for x in ls.parts), "l carries no signs")
    check(not (ks[0] == 1 and ls[0] == 0), "divergent")
    prod = Fraction(1)
    for a in cumulative_signs(ks):
        prod *= a
    lhs = Expression.atom(PosetIntegral(integral_series_poset(ks, ls)))
    rhs = ky(ks, ls) * (1 / prod)
    return IdentityInstance("EQ-5.21", {"k": list(k), "l": list(l)}, lhs, rhs)


# ---------------------------------------------------------------------------
# the printed depth-three relations (k = (1, 1) signed by alpha, l = (1, 2))


def _xi(exps, bs) -> Expression:
    return Expression.atom(LiXi(tuple(exps), tuple(Fraction(b) for b in bs)))


def depth3_lhs(a1: int, a2: int) -> Expression:
    """The Li^Xi combination on the left (the poset integral times alpha'_1 alpha'_2)."""
    p1, p2 = a1, a1 * a2
    out = (_xi((3, 1, 1), (1, p1, p2)) * 2 + _xi((3, 1, 1), (p1, 1, p2)) * 2
           + _xi((3, 1, 1), (p1, p2, 1)) * 2 + _xi((2, 2, 1), (p1, 1, p2))
           + _xi((2, 2, 1), (p1, p2, 1)) + _xi((2, 1, 2), (p1, p2, 1)))
    return out


def depth3_rhs(a1: int, a2: int) -> Expression:
    def z(*pairs):
        return Z([e * s for e, s in pairs])

    return (z((2, a1), (1, a2), (2, 1)) + z((2, a1), (2, 1), (1, a2))
            + z((2, a1), (3, a2)) + z((4, a1), (1, a2)))


def depth3_printed(a1: int, a2: int) -> tuple:
    """Both sides exactly as displayed after substituting the signs."""
    if (a1, a2) == (1, 1):
        lhs = Z(3, 1, 1) * 6 + Z(2, 2, 1) * 2 + Z(2, 1, 2)
        rhs = Z(2, 2, 1) + Z(2, 1, 2) + Z(2, 3) + Z(4, 1)
    elif (a1, a2) == (-1, 1):
        lhs = (Z(3, -1, 1) * 2 + Z(-3, -1, -1) * 2 + Z(-3, 1, -1) * 2
               + Z(-2, -2, -1) + Z(-2, 2, -1) + Z(-2, 1, -2))
        rhs = Z(-2, 1, 2) + Z(-2, 2, 1) + Z(-2, 3) + Z(-4, 1)
    else:
        raise ValueError("only (1, 1) and (-1, 1) are displayed")
    return lhs, rhs


def reduced_depth3_11() -> Expression:
    """Canonical lhs - rhs of the (1, 1) relation; common terms cancel."""
    lhs, rhs = depth3_printed(1, 1)
    return (lhs - rhs).canonical()


@register("REL-DEPTH3", [("a1", "int"), ("a2", "int"), ("form", "str")],
          "the depth-three relations from the (1,1) (*) (1,2)* diagram",
          grid=lambda: [{"a1": a1, "a2": a2, "form": f} for a1, a2 in ((1, 1), (-1, 1), (1, -1), (-1, -1))
                        for f in ("xi", "poset", "printed") if f != "printed" or a2 == 1])
def gen_depth3(a1, a2, form="xi") -> IdentityInstance:
    """form: "xi" (Li^Xi combination = zeta sum), "poset" (diagram integral =
    Li^Xi combination) or "printed" (the displayed MZV relation)."""
    check(a1 in (1, -1) and a2 in (1, -1), "alpha entries are +-1")
    params = {"a1": a1, "a2": a2, "form": form}
    if form == "xi":
        lhs, rhs = depth3_lhs(a1, a2), depth3_rhs(a1, a2)
    elif form == "poset":
        k = SignedIndex((a1, a2))
        lhs = Expression.atom(PosetIntegral(integral_series_poset(k, SignedIndex((1, 2)))))
        rhs = depth3_lhs(a1, a2) * Fraction(1, a1 * a1 * a2)
    elif form == "printed":
        check(a2 == 1, "only (1, 1) and (-1, 1) are displayed")
        lhs, rhs = depth3_printed(a1, a2)
    else:
        check(False, f"unknown form {form!r}")
    return IdentityInstance("REL-DEPTH3", params, lhs, rhs)
