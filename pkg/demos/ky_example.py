"""zeta((3,2) (*) (0,2,2)^star) three ways: reduction to MZVs, closed form, brute-force series.

    python3 demos/ky_example.py
"""

import mpmath

from polyzeta.evaluator import eval_ky, eval_ky_float
from polyzeta.identities.ky import gen_ky_example
from polyzeta.index import idx

inst = gen_ky_example()
print("reduction :", inst.lhs)
print("closed    :", inst.rhs)
a, b = inst.lhs.evaluate(128), inst.rhs.evaluate(128)
series = eval_ky(idx(3, 2), idx(2, 2), True, prec=128)
print("values    :", mpmath.nstr(a.value, 30), mpmath.nstr(b.value, 30), mpmath.nstr(series.value, 30))
direct, tail = eval_ky_float(idx(3, 2), idx(2, 2), True, N=10 ** 6)
print(f"float sum to 10^6: {direct:.15f} (tail < {tail:.1e})")
