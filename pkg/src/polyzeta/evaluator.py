"""
Certified high-precision values of iterated integrals and the sums built on them.

The workhorse is :func:`eval_word`.  An integral over [0, 1] is split at an
interior point x, so that

    I_0^1(w) = sum_{w = u v} I_x^1(u) I_0^x(v),

and every I_x^1(u) is turned into an integral from 0 by t -> 1 - t.  Each
piece is then a power series evaluated strictly inside its disc of
convergence.  For a word whose letters have |a| <= A (A >= 1) every
coefficient of the series satisfies |c_n| <= A^n, so truncating after N
terms costs at most (A x)^{N+1} / (1 - A x).  Coefficients are kept as
fixed-point Python integers, which makes the result bit-reproducible.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mpf

from .algebra import ky_expand
from .bigfloat import BigFloat
from .index import ArgumentedIndex, SignedIndex, as_fraction, is_admissible, signed_to_argumented
from .words import Letter, Word, mzv_word, polylog_word, reflect_letter, reflect_word

GUARD = 16
_SPLIT_GRID = sorted({Fraction(i, d) for d in (2, 3, 4, 5, 6, 8, 10, 12, 16, 20, 25, 32, 50) for i in range(1, d)})
# ratios up to 24/25 still converge at ~0.06 bits per term
MAX_RATIO = Fraction(24, 25)
# per-series term budget; the CLI flag --max-terms overrides it
MAX_TERMS = 1 << 16


class EvaluationError(ValueError):
    pass


def _mpq(q):
    if isinstance(q, Fraction):
        return mpf(q.numerator) / q.denominator
    return mpf(q)


# ---------------------------------------------------------------------------
# fixed-point power series


def _apply_letter(c: list, a: Fraction, N: int) -> list:
    """Series of int_0^t f_a(s) g(s) ds, given the series of g."""
    if a == 0:
        if c[0]:
            raise EvaluationError("dt/t applied to a series with nonzero constant term")
        return [0] + [c[n] // n for n in range(1, N + 1)]
    p, q = a.numerator, a.denominator
    out = [0] * (N + 1)
    d = 0
    for n in range(N):
        if q == 1:
            d = p * d + c[n]
        else:
            d = (p * d) // q + c[n]
        out[n + 1] = d // (n + 1)
    return out


def _horner(c: list, x: Fraction) -> int:
    u, v = x.numerator, x.denominator
    acc = 0
    for cn in reversed(c):
        acc = (acc * u) // v + cn
    return acc


def _ratio_bits(rho: float) -> float:
    return -math.log2(rho)


def choose_split(labels) -> tuple[Fraction, float, float]:
    """Deterministic split point minimising the worse of the two series ratios."""
    A_low = max([1.0] + [abs(float(a)) for a in labels])
    A_up = max([1.0] + [abs(float(reflect_letter(Letter(a))[1].a)) for a in labels])
    best = None
    for x in _SPLIT_GRID:
        r = max(A_low * float(x), A_up * float(1 - x))
        key = (r, abs(x - Fraction(1, 2)), x)
        if best is None or key < best[0]:
            best = (key, x, A_low * float(x), A_up * float(1 - x))
    _, x, rl, ru = best
    if max(rl, ru) >= float(MAX_RATIO):
        raise EvaluationError("no split point gives a usable convergence ratio for this word")
    return x, rl, ru


@lru_cache(maxsize=1 << 15)
def _eval_word_cached(labels: tuple, prec: int) -> BigFloat:
    L = len(labels)
    if L == 0:
        return BigFloat(1, 0, prec)
    x, rho_l, rho_u = choose_split(labels)
    y = 1 - x

    refl = [reflect_letter(Letter(a)) for a in labels]
    prefs = [Fraction(1)]
    for f, _ in refl:
        prefs.append(prefs[-1] * f)
    pmax = max(abs(p) for p in prefs)

    extra = math.log2(L + 2) + max(0.0, math.log2(float(pmax))) + 8
    target = prec + GUARD + extra
    N_l = int(math.ceil((target - math.log2(1 - rho_l) - math.log2(1 - rho_u)) / _ratio_bits(rho_l))) + 2
    N_u = int(math.ceil((target - math.log2(1 - rho_l) - math.log2(1 - rho_u)) / _ratio_bits(rho_u))) + 2
    if max(N_l, N_u) > MAX_TERMS:
        raise EvaluationError(f"word integral needs {max(N_l, N_u)} terms, above the budget of {MAX_TERMS}")
    wp = prec + GUARD + 32 + int(math.log2(float(pmax)) + 1 if pmax > 1 else 0)
    one = 1 << wp

    # lower pieces: suffixes w[i:], built from the innermost letter outwards
    low = [0] * (L + 1)
    c = [one] + [0] * N_l
    low[L] = one
    for i in range(L - 1, -1, -1):
        c = _apply_letter(c, Fraction(labels[i]), N_l)
        low[i] = _horner(c, x)

    # upper pieces: reflected prefixes, the reflected image of w[0] innermost
    up = [0] * (L + 1)
    c = [one] + [0] * N_u
    up[0] = one
    for i in range(1, L + 1):
        c = _apply_letter(c, refl[i - 1][1].a, N_u)
        up[i] = _horner(c, y)

    with mpmath.workprec(wp + 16):
        scale = mpf(2) ** (-wp)
        tail_l = mpf(rho_l) ** (N_l + 1) / (1 - mpf(rho_l))
        tail_u = mpf(rho_u) ** (N_u + 1) / (1 - mpf(rho_u))
        round_l = (2 * L / (1 - mpf(rho_l)) + N_l + 2) * scale
        round_u = (2 * L / (1 - mpf(rho_u)) + N_u + 2) * scale
        el = tail_l + round_l
        eu = tail_u + round_u
        total = mpf(0)
        bound = mpf(0)
        for i in range(L + 1):
            lv = mpf(low[i]) * scale
            uv = mpf(up[i]) * scale
            pr = mpf(prefs[i].numerator) / prefs[i].denominator
            total += pr * uv * lv
            # the i = 0 upper piece and the i = L lower piece are exactly 1
            dl = 0 if i == L else el
            du = 0 if i == 0 else eu
            bound += abs(pr) * (abs(uv) * dl + abs(lv) * du + du * dl)
        bound += (L + 1) * 4 * scale * max(1, abs(total))
    return BigFloat(total, bound, prec + GUARD)


def eval_word(w: Word, prec: int = 128) -> BigFloat:
    """I_0^1(w) with a certified bound."""
    if not w.is_convergent():
        raise EvaluationError(f"divergent word {w}")
    return _eval_word_cached(tuple(w.labels), prec)


# ---------------------------------------------------------------------------
# polylogarithms and zeta values through words


def eval_li(li: ArgumentedIndex, prec: int = 128) -> BigFloat:
    """Li_s(z) via its word; the pole-free condition is checked on the letters."""
    c, w = polylog_word(li)
    if li.exponents and li.args[0] == 1 and li.exponents[0] == 1:
        raise EvaluationError("divergent polylog (leading exponent 1 at argument 1)")
    return eval_word(w, prec) * c


def eval_mzv(k: SignedIndex, prec: int = 128) -> BigFloat:
    if not is_admissible(k):
        raise EvaluationError(f"non-admissible index {k}")
    c, w = mzv_word(k)
    return eval_word(w, prec) * c


def eval_mzv_dual(k: SignedIndex, prec: int = 128) -> BigFloat:
    """Second route: evaluate the t -> 1 - t image of the word instead."""
    if not is_admissible(k):
        raise EvaluationError(f"non-admissible index {k}")
    c, w = mzv_word(k)
    f, w2 = reflect_word(w)
    return eval_word(w2, prec) * (c * f)


def eval_li_xi(exponents, bs, prec: int = 128) -> BigFloat:
    """sum b_1^{n_1-n_2} ... b_r^{n_r} / n^s, i.e. Li_s(b_1, b_2/b_1, ...)."""
    bs = [as_fraction(b) for b in bs]
    letters = []
    c = Fraction(1)
    for s, b in zip(exponents, bs):
        letters += [Letter(0)] * (s - 1) + [Letter(b)]
        c *= b
    return eval_word(Word(tuple(letters)), prec) * c


# ---------------------------------------------------------------------------
# direct series with certified tails


def _tail_bound(rho, d: int, s: int, N: int, prec: int):
    """Bound for sum_{n > N} rho^n (1 + ln n)^d / n^s."""
    with mpmath.workprec(prec + 32):
        rho = _mpq(rho)
        n1 = N + 1
        g = (1 + mpmath.log(n1)) ** d / mpf(n1) ** s
        if rho < 1:
            q = rho * mpmath.exp(mpf(d) / n1)
            if q >= 1:
                return mpmath.inf
            return rho ** n1 * g / (1 - q)
        if s < 2:
            return mpmath.inf
        u0 = 1 + mpmath.log(N)
        if u0 <= mpf(d) / s:
            return mpmath.inf
        # integral of (1 + ln t)^d t^-s from N to infinity
        return mpmath.e ** (s - 1) * mpmath.gammainc(d + 1, (s - 1) * u0) / mpf(s - 1) ** (d + 1)


def _pick_terms(rho, d, s, prec, max_terms, tol=None):
    if max_terms is None:
        max_terms = MAX_TERMS
    with mpmath.workprec(prec + 32):
        goal = mpf(2) ** (-(prec + 4)) if tol is None else _mpq(as_fraction(tol))
    N = 16
    while N <= max_terms:
        if _tail_bound(rho, d, s, N, prec) <= goal:
            return N
        N *= 2
    raise EvaluationError(f"tail bound does not reach the requested accuracy within {max_terms} terms")


def eval_polylog(exponents, args, N: int | None = None, prec: int = 128,
                 max_terms: int | None = None, tol=None) -> BigFloat:
    """Direct partial sum of the nested series plus a certified tail bound.

    The nested tail sums are carried by the usual prefix recursion.  The
    tail bound uses |prod z| <= rho^{n_1} with rho the largest partial
    product, which is geometric for rho < 1 and polynomial at rho = 1.
    """
    li = ArgumentedIndex(tuple(exponents), tuple(args))
    if not li.is_admissible():
        raise EvaluationError(f"{li} is outside the domain of the series")
    r = li.depth
    if r == 0:
        return BigFloat(1, 0, prec)
    rho = max(abs(b) for b in li.cumulative())
    s1 = li.exponents[0]
    if rho == 1 and s1 == 1:
        raise EvaluationError("conditionally convergent series; use the word route")
    if N is None:
        N = _pick_terms(rho, r - 1, s1, prec, max_terms, tol)
    wp = prec + GUARD + 32 + int(math.log2(N + 2)) * 2
    with mpmath.workprec(wp):
        zs = [mpf(z.numerator) / z.denominator for z in li.args]
        # level r is innermost; S holds the inclusive partial sums of the level below
        inner = [mpf(1)] * (N + 1)
        inner_abs = [mpf(1)] * (N + 1)
        for j in range(r - 1, -1, -1):
            s = li.exponents[j]
            z = zs[j]
            acc, acc_abs = mpf(0), mpf(0)
            zn = mpf(1)
            out = [mpf(0)] * (N + 1)
            out_abs = [mpf(0)] * (N + 1)
            innermost = j == r - 1
            for n in range(1, N + 1):
                zn *= z
                base = zn / mpf(n) ** s
                t = base if innermost else base * inner[n - 1]
                ta = abs(base) if innermost else abs(base) * inner_abs[n - 1]
                acc += t
                acc_abs += ta
                out[n] = acc
                out_abs[n] = acc_abs
            inner, inner_abs = out, out_abs
        value = inner[N]
        rounding = inner_abs[N] * (N + 4) * (r + 2) * mpf(2) ** (-wp + 2)
        tail = _tail_bound(rho, r - 1, s1, N, prec)
    return BigFloat(value, tail + rounding, prec + GUARD)


def eval_li_star(exponents, z, prec: int = 128, N: int | None = None,
                 max_terms: int | None = None) -> BigFloat:
    """sum_{n_1 >= ... >= n_r >= 1} z^{n_1} / n^s for |z| <= 1/2."""
    z = as_fraction(z)
    if abs(z) > Fraction(1, 2):
        raise EvaluationError("star polylog series is only used for |z| <= 1/2")
    exponents = tuple(exponents)
    r = len(exponents)
    if r == 0:
        return BigFloat(1, 0, prec)
    if any(e < 1 for e in exponents):
        raise EvaluationError("exponents must be positive")
    rho = abs(z)
    if N is None:
        N = _pick_terms(rho, r - 1, exponents[0], prec, max_terms)
    wp = prec + GUARD + 32 + int(math.log2(N + 2)) * 2
    with mpmath.workprec(wp):
        inner = [mpf(1)] * (N + 1)
        for j in range(r - 1, 0, -1):
            s = exponents[j]
            acc = mpf(0)
            out = [mpf(0)] * (N + 1)
            for n in range(1, N + 1):
                acc += inner[n] / mpf(n) ** s if j < r - 1 else 1 / mpf(n) ** s
                out[n] = acc
            inner = out
        zf = mpf(z.numerator) / z.denominator
        acc = mpf(0)
        zn = mpf(1)
        for n in range(1, N + 1):
            zn *= zf
            acc += zn * inner[n] / mpf(n) ** exponents[0]
        rounding = (N + 4) * (r + 2) * mpf(2) ** (-wp + 4) * max(1, abs(acc))
        tail = _tail_bound(rho, r - 1, exponents[0], N, prec)
    return BigFloat(acc, tail + rounding, prec + GUARD)


def eval_li_star_words(exponents, z, prec: int = 128) -> BigFloat:
    """Second route: expand the star sum into plain polylogs and use words."""
    from .algebra import star_terms

    z = as_fraction(z)
    total = BigFloat(0, 0, prec + GUARD)
    for t in star_terms(tuple(exponents)):
        total = total + eval_li(ArgumentedIndex(t, (z,) + (Fraction(1),) * (len(t) - 1)), prec)
    return total


# ---------------------------------------------------------------------------
# single zeta values


@lru_cache(maxsize=256)
def _eta_borwein(s: int, prec: int) -> BigFloat:
    """Dirichlet eta by Borwein's accelerated alternating sum.

    For real s >= 1 the truncation error is below 3.4 (3 + sqrt 8)^-n.
    All partial data are exact rationals, so only that truncation remains.
    """
    n = int(math.ceil((prec + GUARD + 4) / math.log2(3 + math.sqrt(8)))) + 1
    d = []
    acc = 0
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4 ** i, math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    tot = Fraction(0)
    for k in range(n):
        tot += (-1) ** k * (d[k] - dn) / Fraction((k + 1) ** s)
    val = -tot / dn
    wp = prec + GUARD + 8
    with mpmath.workprec(wp):
        v = mpf(val.numerator) / val.denominator
        err = mpf("3.4") / (3 + mpmath.sqrt(8)) ** n + abs(v) * mpf(2) ** (-wp + 1)
    return BigFloat(v, err, prec + GUARD)


def zeta_single(s: int, sign: int = 1, prec: int = 128, route: str = "eta") -> BigFloat:
    """zeta(s) (sign +1, s >= 2) or the alternating sum_n (-1)^n / n^s (sign -1)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if s < 1 or (s == 1 and sign == 1):
        raise EvaluationError("divergent single zeta")
    if route == "word":
        return eval_mzv(SignedIndex((s * sign,)), prec)
    eta = _eta_borwein(s, prec)
    if sign == -1:
        return -eta
    # zeta(s) = eta(s) / (1 - 2^{1-s})
    return eta * (Fraction(2 ** (s - 1), 2 ** (s - 1) - 1))


# ---------------------------------------------------------------------------
# logarithms


@lru_cache(maxsize=256)
def log_value(c: Fraction, prec: int = 128) -> BigFloat:
    if c <= 0:
        raise EvaluationError("log of a non-positive rational")
    wp = prec + GUARD + 8
    with mpmath.workprec(wp):
        v = mpmath.log(mpf(c.numerator)) - mpmath.log(mpf(c.denominator))
        err = (abs(v) + 1) * mpf(2) ** (-wp + 3)
    return BigFloat(v, err, prec + GUARD)


# ---------------------------------------------------------------------------
# Kaneko-Yamamoto type values


def _ky_check(k: SignedIndex, l: SignedIndex, zero_head: bool):
    if not k:
        raise EvaluationError("empty left index")
    if not zero_head and not l:
        raise EvaluationError("empty right index")
    e = abs(k[0]) + (0 if zero_head else abs(l[0]))
    sign = (1 if k[0] > 0 else -1) * (1 if zero_head or l[0] > 0 else -1)
    return e, sign


def eval_ky(k: SignedIndex, l: SignedIndex, zero_head: bool = False, x=1, prec: int = 128) -> BigFloat:
    """sum_n zeta_{n-1}(k tail) zeta*_n(l tail) (a b x)^n / n^{k_1 + l_1}.

    Evaluated through the formal expansion of k ⊛ l⋆ into plain indices.
    """
    x = as_fraction(x)
    e, sign = _ky_check(k, l, zero_head)
    if x == 1 and e == 1 and sign == 1:
        raise EvaluationError("divergent Kaneko-Yamamoto value")
    total = BigFloat(0, 0, prec + GUARD)
    for term, c in ky_expand(k, l, zero_head).items():
        if x == 1:
            v = eval_mzv(term, prec)
        else:
            v = eval_li(signed_to_argumented(term, x), prec)
        total = total + v * c
    return total


def eval_ky_series(k: SignedIndex, l: SignedIndex, zero_head: bool = False, x=1,
                   N: int | None = None, prec: int = 128, max_terms: int | None = None) -> BigFloat:
    """Direct truncated series with a certified tail bound."""
    x = as_fraction(x)
    e, sign = _ky_check(k, l, zero_head)
    ltail = l.parts if zero_head else l.parts[1:]
    d = (len(k) - 1) + len(ltail)
    rho = abs(x)
    if rho > 1 or (rho == 1 and e < 2):
        raise EvaluationError("series route needs |x| < 1 or a head exponent >= 2")
    if N is None:
        N = _pick_terms(rho, d, e, prec, max_terms)
    wp = prec + GUARD + 32 + int(math.log2(N + 2)) * 2
    with mpmath.workprec(wp):
        tk = _mpf_nested(k.parts[1:], N, star=False)
        tl = _mpf_nested(ltail, N, star=True)
        xf = mpf(x.numerator) / x.denominator * sign
        acc, acc_abs = mpf(0), mpf(0)
        xn = mpf(1)
        for n in range(1, N + 1):
            xn *= xf
            t = xn * tk[n - 1] * tl[n] / mpf(n) ** e
            acc += t
            acc_abs += abs(t)
        rounding = acc_abs * (N + 4) * (d + 3) * mpf(2) ** (-wp + 3)
        tail = _tail_bound(rho, d, e, N, prec)
    return BigFloat(acc, tail + rounding, prec + GUARD)


def _mpf_nested(parts: tuple, N: int, star: bool) -> list:
    table = [mpf(1)] * (N + 1)
    for j in range(len(parts) - 1, -1, -1):
        e = abs(parts[j])
        neg = parts[j] < 0
        acc = mpf(0)
        out = [mpf(0)] * (N + 1)
        for n in range(1, N + 1):
            f = mpf(-1 if (neg and n % 2) else 1) / mpf(n) ** e
            acc += f * (table[n] if star else table[n - 1])
            out[n] = acc
        table = out
    return table


def eval_ky_float(k: SignedIndex, l: SignedIndex, zero_head: bool = False, N: int = 10 ** 6):
    """Double-precision truncated series at x = 1 with numpy; returns (value, tail bound).

    Meant as a low-precision cross-check only.
    """
    import numpy as np

    e, sign = _ky_check(k, l, zero_head)
    if e < 2:
        raise EvaluationError("direct series needs a head exponent >= 2")
    ltail = l.parts if zero_head else l.parts[1:]
    n = np.arange(1, N + 1, dtype=np.float64)
    alt = np.where(np.arange(1, N + 1) % 2 == 1, -1.0, 1.0)

    def nested(parts, star):
        table = np.ones(N + 1)
        for p in reversed(parts):
            f = (alt if p < 0 else 1.0) / n ** abs(p)
            prev = table[1:] if star else table[:-1]
            table = np.concatenate(([0.0], np.cumsum(f * prev)))
        return table

    tk = nested(k.parts[1:], False)
    tl = nested(ltail, True)
    terms = tk[:-1] * tl[1:] / n ** e
    if sign < 0:
        terms = terms * alt
    value = float(np.sum(terms))
    d = (len(k) - 1) + len(ltail)
    tail = float(_tail_bound(1, d, e, N, 53))
    return value, tail
