import random
from fractions import Fraction
from itertools import permutations

import mpmath
import pytest

from polyzeta.evaluator import eval_li, eval_mzv, eval_word
from polyzeta.expression import LiXi, PosetIntegral
from polyzeta.identities.common import eq21_index
from polyzeta.identities.polylog import reversal_sides
from polyzeta.index import ArgumentedIndex, SignedIndex, idx
from polyzeta.poset import (Poset, PosetError, count_linear_extensions, decompose, integral_series_poset,
                            linear_extensions, poset_extensions, poset_from_json, poset_to_json, poset_value)
from polyzeta.words import Letter, Word, index_to_word, mzv_word, reflect_word, word_shape, word_to_index

H = Fraction(1, 2)


def close(x, y, tol=1e-30):
    return abs(x.value - y.value) <= x.bound + y.bound + mpmath.mpf(tol)


# ---------------------------------------------------------------------------
# words and polylogs


def test_index_to_word_examples():
    assert index_to_word((0, 1), (1,), (1, 1)) == Word.of(0, 1)
    assert index_to_word((1, 1), (1,), (-1, -1)) == Word.of(-1, 0, -1)
    # m_1 = 0: a_1 plays no role
    assert index_to_word((0, 2), (1,), (H, H)) == index_to_word((0, 2), (1,), (1, H))
    with pytest.raises(ValueError):
        index_to_word((1, 1), (1,), (1, 1))  # a_1 = 1 diverges
    with pytest.raises(ValueError):
        index_to_word((1, 0), (1,), (H, H))


@pytest.mark.parametrize("m,p,a", [
    ((1, 1), (1,), (-1, -1)),
    ((0, 1), (1,), (1, 1)),
    ((2, 1, 2), (0, 2), (H, Fraction(-1, 3), 1)),
    ((1, 2), (3,), (Fraction(1, 3), -1)),
])
def test_word_index_round_trip(m, p, a):
    w = index_to_word(m, p, a)
    li, pref = word_to_index(w)
    exps, args = eq21_index(m, p, a)
    assert list(li.exponents) == exps and list(li.args) == args
    prod = Fraction(1)
    for mj, aj in zip(m, a):
        prod *= Fraction(aj) ** mj
    assert pref == 1 / prod
    mm, pp, aa = word_shape(w)
    assert index_to_word(mm, pp, aa) == w


def test_word_to_index_examples():
    li, c = word_to_index(Word.of(0, 1))
    assert li == ArgumentedIndex((2,), (Fraction(1),)) and c == 1
    li, c = word_to_index(Word.of(0, 0, 1))
    assert li.exponents == (3,) and c == 1
    li, c = word_to_index(Word.of(H))
    assert li == ArgumentedIndex((1,), (H,)) and c == 2
    v = eval_word(Word.of(H), 128)
    with mpmath.workprec(140):
        assert abs(v.value - 2 * mpmath.log(2)) < 1e-35
    with pytest.raises(ValueError):
        word_to_index(Word.of(1, 0))


def test_mzv_word_matches_eval():
    for k in (idx(2), idx(-2, 1), idx(3, -1, 1)):
        c, w = mzv_word(k)
        assert close(eval_word(w, 128) * c, eval_mzv(k, 128))


def test_reflection_examples():
    c, w = reflect_word(Word.of(0, 1))
    assert (c, w) == (1, Word.of(0, 1))
    # dt/(1 + t) pulls back to (1/2) ds / (1 - s/2)
    c, w = reflect_word(Word.of(0, -1))
    assert w == Word.of(H, 1) and c == H


def _random_word(rng, weight):
    letters = [0] + [rng.choice([0, 1, -1, H, Fraction(-1, 2), Fraction(1, 3)]) for _ in range(weight - 2)]
    letters.append(rng.choice([1, -1, H, Fraction(1, 3)]))
    return Word.of(*letters)


def test_reflection_random_words():
    rng = random.Random(7)
    for _ in range(50):
        w = _random_word(rng, rng.randint(2, 6))
        c, r = reflect_word(w)
        assert close(eval_word(w, 128), eval_word(r, 128) * c, 1e-30)
        c2, back = reflect_word(r)
        assert back == w and c * c2 == 1


def test_reversal_lemma():
    for letters in ([H, H], [H, Fraction(1, 3)], [H, Fraction(1, 3), -1], [-1, -1, H]):
        lhs, rhs = reversal_sides(letters)
        d = (lhs - rhs).evaluate(128)
        assert abs(d.value) <= d.bound + mpmath.mpf(1e-30)
    # symmetric two-letter case: 2 g(f, f) = g(f)^2
    lhs, rhs = reversal_sides([H, H])
    assert str(rhs) == "I(1/2)^2"
    assert str(lhs) == "2*I(1/2,1/2)"


def test_reversal_rejects_divergent_letters():
    from polyzeta.identities import ParameterError

    with pytest.raises(ParameterError):
        reversal_sides([0, H])
    with pytest.raises(ParameterError):
        reversal_sides([1, H])


# ---------------------------------------------------------------------------
# posets


def brute_count(X: Poset) -> int:
    n = len(X)
    return sum(1 for perm in permutations(range(n))
               if all(perm.index(a) < perm.index(b) for a, b in X.cover))


def random_poset(rng, n):
    cover = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3]
    order = list(range(n))
    rng.shuffle(order)
    cover = [(order[i], order[j]) for i, j in cover]
    return Poset.build([rng.choice([0, 1, -1, H]) for _ in range(n)], cover)


def test_linear_extension_counts_brute_force():
    rng = random.Random(11)
    for i in range(220):
        X = random_poset(rng, 1 + i % 7)
        assert count_linear_extensions(X) == brute_count(X)
        exts = list(linear_extensions(X))
        assert len(exts) == len(set(exts)) == brute_count(X)


def test_two_chains():
    X = Poset.build([H, 0, H, 0], [(0, 1), (2, 3)])
    assert count_linear_extensions(X) == 6
    fs = poset_extensions(X)
    assert sum(fs.values()) == 6


def test_chain_is_one_word():
    X = Poset.chain([1, 0, 0])
    fs = poset_extensions(X)
    assert dict(fs.items()) == {Word.of(0, 0, 1): 1}


def test_printed_eight_node_diagram():
    # x1 < x2 > x3 < x4 < x5 > x6 < x7 < x8, labels (1, 0, a1, 0, 0, a2, 0, 0)
    a1, a2 = Fraction(-1), Fraction(1, 2)
    cover = [(0, 1), (2, 1), (2, 3), (3, 4), (5, 4), (5, 6), (6, 7)]
    X = Poset.build([1, 0, a1, 0, 0, a2, 0, 0], cover)
    assert X.is_admissible()
    assert count_linear_extensions(X) == brute_count(X)


def test_decomposition_order_invariant():
    rng = random.Random(3)
    done = 0
    while done < 30:
        X = random_poset(rng, rng.randint(2, 6))
        if not X.is_admissible():
            continue
        a = decompose(X, "first")
        assert a == decompose(X, "last") == poset_extensions(X)
        done += 1


def test_non_admissible():
    X = Poset.build([0, 1], [])
    assert not X.is_admissible()
    with pytest.raises(PosetError):
        poset_extensions(X)
    with pytest.raises(PosetError):
        Poset.build([0, 1], [(0, 1), (1, 0)])


def test_chain_values():
    v = poset_value(Poset.chain([1, 0]), 128)
    with mpmath.workprec(140):
        assert abs(v.value - mpmath.pi ** 2 / 6) < 1e-35
        # a single alpha = 1/2 node below a zero: Li_2(1/2) / (1/2)
        v = poset_value(Poset.chain([H, 0]), 128)
        assert abs(v.value - 2 * mpmath.polylog(2, 0.5)) < 1e-35


def test_chain_equals_lixi():
    # totally ordered diagram (k, alpha): I = Li^Xi_k(alpha'_1, ..) / prod alpha'
    for exps, bs in (((2, 1), (H, Fraction(-1, 3))), ((2, 2, 1), (1, -1, Fraction(1, 3)))):
        labels = []
        for s, b in zip(reversed(exps), reversed(bs)):
            labels += [b] + [0] * (s - 1)
        v = poset_value(Poset.chain(labels), 128)
        ref = LiXi(exps, tuple(Fraction(b) for b in bs)).evaluate(128)
        prod = Fraction(1)
        for b in bs:
            prod *= Fraction(b)
        assert close(v * prod, ref)


def test_integral_series_poset_shape():
    X = integral_series_poset(idx(2, -1), idx(1, 2))
    # chain of k blocks (1 + 1 + 1 nodes) topped by l_1 zeros, then one extra column of 2
    assert len(X) == 2 + 1 + 1 + 2
    assert X.is_admissible()
    assert PosetIntegral(X).canonical().atoms()


def test_json_round_trip():
    data = {"nodes": [{"id": "x1", "label": "a1"}, {"id": "x2", "label": "0"}, {"id": "x3", "label": "1/2"}],
            "cover": [["x1", "x2"], ["x3", "x2"]], "alphas": {"a1": "-1"}}
    X = poset_from_json(data)
    assert X.labels == (-1, 0, H)
    assert poset_from_json(poset_to_json(X)) == X
    with pytest.raises(PosetError):
        poset_from_json({"nodes": [{"id": "x", "label": "a9"}]})
