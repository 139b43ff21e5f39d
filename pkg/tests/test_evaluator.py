import random
from fractions import Fraction

import mpmath
import pytest

from polyzeta import evaluator as ev
from polyzeta.bigfloat import BigFloat
from polyzeta.evaluator import (EvaluationError, eval_ky, eval_ky_float, eval_ky_series, eval_li, eval_li_star,
                                eval_li_star_words, eval_mzv, eval_mzv_dual, eval_polylog, eval_word,
                                zeta_single)
from polyzeta.expression import Expression, Li, MZV, log, zeta
from polyzeta.finite import ky_partial_sum
from polyzeta.index import ArgumentedIndex, SignedIndex, idx
from polyzeta.words import Word, mzv_word

H = Fraction(1, 2)
P = 128


def err(x, ref):
    with mpmath.workprec(160):
        return abs(x.value - ref)


def agree(a: BigFloat, b: BigFloat) -> bool:
    return abs(a.value - b.value) <= a.bound + b.bound


def test_classical_values():
    with mpmath.workprec(160):
        # negate inside workprec: mpf negation rounds to the ambient precision
        z2, z2bar, ml2 = mpmath.pi ** 2 / 6, -mpmath.pi ** 2 / 12, -mpmath.log(2)
    assert err(eval_mzv(idx(2), P), z2) < 1e-30
    assert err(eval_mzv(idx(-2), P), z2bar) < 1e-30
    assert err(eval_mzv(idx(-1), P), ml2) < 1e-30
    assert abs(eval_mzv(idx(2, 1), P).value - eval_mzv(idx(3), P).value) < 1e-30
    assert err(zeta_single(1, -1, P), ml2) < 1e-30
    assert err(zeta_single(2, 1, P), z2) < 1e-30


def test_bounds_are_small():
    for k in (idx(2), idx(-1, -1), idx(3, 1, 1)):
        assert eval_mzv(k, P).bound < mpmath.mpf(2) ** (-P + 16)


def test_negation_keeps_precision():
    # mpf negation used to round to the global 53 bits
    with mpmath.workprec(300):
        third = mpmath.mpf(1) / 3
    x = BigFloat(third, 0, 300)
    y = -x
    with mpmath.workprec(300):
        assert abs(y.value + third) < mpmath.mpf(2) ** -290
        assert abs(abs(y).value - third) < mpmath.mpf(2) ** -290
    assert mpmath.mp.prec == 53
    # the alternating harmonic value is the same from either direction
    a = (zeta(-1) * -1).evaluate(P)
    b = (-zeta(-1)).evaluate(P)
    assert a.value == b.value


def test_printed_relation_at_m1():
    # zeta(2bar) = zeta(1bar,1bar) - zeta(1bar,1)
    lhs = eval_mzv(idx(-2), P)
    rhs = eval_mzv(idx(-1, -1), P) - eval_mzv(idx(-1, 1), P)
    assert agree(lhs, rhs)


def test_polylog_examples():
    with mpmath.workprec(160):
        l2 = mpmath.log(2)
    assert err(eval_polylog((1,), (H,), prec=P), l2) < 1e-30
    for m in (1, 2, 3):
        v = eval_polylog((1,) * m, (Fraction(1, 3),) + (1,) * (m - 1), prec=P)
        with mpmath.workprec(160):
            ref = (-mpmath.log(1 - mpmath.mpf(1) / 3)) ** m / mpmath.factorial(m)
        assert err(v, ref) < 1e-30
    # the slow path at z = 1: polynomial tail, so only a loose tolerance is reachable
    v = eval_polylog((2,), (1,), prec=64, tol=Fraction(1, 10 ** 3))
    with mpmath.workprec(80):
        assert abs(v.value - mpmath.pi ** 2 / 6) <= v.bound < 1e-3
    with pytest.raises(EvaluationError):
        eval_polylog((2,), (1,), prec=128, max_terms=1 << 10)


def test_polylog_against_mpmath():
    for s in (1, 2, 3):
        for z in (H, Fraction(-1, 3), Fraction(2, 3)):
            v = eval_li(ArgumentedIndex((s,), (z,)), P)
            with mpmath.workprec(160):
                ref = mpmath.polylog(s, mpmath.mpf(z.numerator) / z.denominator)
            assert err(v, ref) < 1e-30


def test_star_polylog():
    with mpmath.workprec(160):
        l2 = mpmath.log(2)
    assert err(eval_li_star((1,), H, P), l2) < 1e-30
    assert agree(eval_li_star((2,), H, P), eval_li(ArgumentedIndex((2,), (H,)), P))
    assert agree(eval_li_star((1, 2), H, P), eval_li_star_words((1, 2), H, P))
    with pytest.raises(EvaluationError):
        eval_li_star((1,), Fraction(3, 4), P)


def test_two_routes_single_zeta():
    for s in range(2, 8):
        for sg in (1, -1):
            assert abs(zeta_single(s, sg, P).value - zeta_single(s, sg, P, route="word").value) < 1e-30


def _random_atom(rng):
    if rng.random() < 0.5:
        depth = rng.randint(1, 3)
        parts = [rng.randint(1, 3) * rng.choice((1, -1)) for _ in range(depth)]
        if parts[0] == 1:
            parts[0] = 2
        return MZV(SignedIndex(tuple(parts)))
    depth = rng.randint(1, 3)
    exps = tuple(rng.randint(1, 3) for _ in range(depth))
    args = [rng.choice([H, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 3)])]
    args += [rng.choice([1, -1]) for _ in range(depth - 1)]
    return Li(ArgumentedIndex(exps, tuple(Fraction(a) for a in args)))


def test_two_route_agreement_random_atoms():
    rng = random.Random(2024)
    for _ in range(100):
        a = _random_atom(rng)
        x, y = a.evaluate(P), a.evaluate_alt(P)
        assert y is not None
        assert agree(x, y), a


def test_bound_soundness_at_higher_precision():
    rng = random.Random(99)
    for _ in range(100):
        a = _random_atom(rng)
        lo, hi = a.evaluate(96), a.evaluate(160)
        with mpmath.workprec(200):
            assert abs(lo.value - hi.value) <= lo.bound + hi.bound


def test_dual_route():
    for k in (idx(2, 1), idx(-1, -1, 1), idx(3, -2)):
        assert agree(eval_mzv(k, P), eval_mzv_dual(k, P))


def test_words_need_convergence():
    with pytest.raises(EvaluationError):
        eval_word(Word.of(1, 0), P)
    with pytest.raises(EvaluationError):
        eval_mzv(idx(1, 2), P)
    with pytest.raises(EvaluationError):
        # 9/10 is beyond every split point
        eval_word(Word.of(0, Fraction(19, 10)), P)


def test_term_budget():
    old = ev.MAX_TERMS
    try:
        ev.MAX_TERMS = 8
        ev._eval_word_cached.cache_clear()
        with pytest.raises(EvaluationError):
            eval_word(Word.of(0, 1), 200)
    finally:
        ev.MAX_TERMS = old
        ev._eval_word_cached.cache_clear()


def test_ky_values():
    # (2) (*) (1)^star = zeta(3)
    assert agree(eval_ky(idx(2), idx(1), prec=P), eval_mzv(idx(3), P))
    with pytest.raises(EvaluationError):
        eval_ky(idx(1), idx(0 + 1), True, prec=P)


def test_ky_series_partial_sums_are_exact():
    # the direct series at x = 1/2 and its rational truncation
    k, l = idx(2, 1), idx(1, 2)
    v = eval_ky_series(k, l, False, H, N=12, prec=P)
    exact = Fraction(0)
    # rational partial sum with the weight x^n folded in term by term
    from polyzeta.finite import mhs_eval, mhss_eval

    for n in range(1, 13):
        exact += H ** n / Fraction(n ** 3) * mhs_eval(n - 1, idx(1)) * mhss_eval(n, idx(2))
    with mpmath.workprec(160):
        ref = mpmath.mpf(exact.numerator) / exact.denominator
        assert abs(v.value - ref) <= v.bound
    assert ky_partial_sum(5, k, l) > 0


def test_ky_example_direct():
    # zeta((3,2) (*) (0,2,2)^star) by the float series with N = 10^6
    direct, tail = eval_ky_float(idx(3, 2), idx(2, 2), True, N=10 ** 6)
    ref = eval_ky(idx(3, 2), idx(2, 2), True, prec=P)
    assert abs(direct - float(ref.value)) < 1e-5
    assert tail < 1e-5


def test_expression_evaluation():
    e = log(2) ** 2 * Fraction(1, 2)
    with mpmath.workprec(160):
        assert abs(e.evaluate(P).value - mpmath.log(2) ** 2 / 2) < 1e-30
    prod = (zeta(2) * zeta(3)).evaluate(P)
    assert agree(prod, eval_mzv(idx(2), P) * eval_mzv(idx(3), P))
    assert Expression().evaluate(P).value == 0
