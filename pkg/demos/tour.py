"""A short walk through the package: algebra, exact sums, evaluation, identities, posets.

    python3 demos/tour.py
"""

from fractions import Fraction

import mpmath

from polyzeta.algebra import circled_star, star_expand, stuffle
from polyzeta.evaluator import eval_li, eval_mzv
from polyzeta.finite import eval_formal_sum, mhs_eval, mhss_eval
from polyzeta.identities import get_family
from polyzeta.index import ArgumentedIndex, idx
from polyzeta.poset import Poset, count_linear_extensions, decompose, poset_value
from polyzeta.verify import check_instance
from polyzeta.words import format_word

# quasi-shuffle products and the star expansion
u, v = idx(2, -1), idx(3)
print("stuffle", u, v, "=", stuffle(u, v))
print("star expansion of (2,1,3):", star_expand(idx(2, 1, 3)))
print("(2,1) (*) (1,1) =", circled_star(idx(2, 1), idx(1, 1)))

# finite sums are exact and multiplicative under the stuffle product
n = 12
lhs = eval_formal_sum(n, stuffle(u, v))
print(f"zeta_{n}(u * v) = {lhs} = zeta_{n}(u) zeta_{n}(v): {lhs == mhs_eval(n, u) * mhs_eval(n, v)}")
print(f"zeta*_{n}(2,1) = {mhss_eval(n, idx(2, 1))}")

# certified values
z21 = eval_mzv(idx(2, 1), 128)
print("zeta(2,1) =", mpmath.nstr(z21.value, 30), "+/-", mpmath.nstr(z21.bound, 3))
li = eval_li(ArgumentedIndex((2, 1), (Fraction(1, 2), Fraction(1))), 128)
print("Li_{2,1}(1/2, 1) =", mpmath.nstr(li.value, 30))

# an identity instance, checked to 1e-20
inst = get_family("BBB-4.3").make(m=1, n=2)
rec = check_instance(inst)
print(rec["instance"], "pass" if rec["pass"] else "FAIL", "residual", rec["residual"])

# a labelled poset: two chains 1 < 0 side by side
X = Poset.build([1, 0, Fraction(1, 2), 0], [(0, 1), (2, 3)])
print("linear extensions:", count_linear_extensions(X))
for w, c in decompose(X).items():
    print(f"  {c} * I({format_word(w)})")
print("I(X) =", mpmath.nstr(poset_value(X, 128).value, 25))
