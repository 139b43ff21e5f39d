"""
polyzeta: multiple zeta values, alternating Euler sums and multiple
polylogarithms.

Signed indices and their algebra (stuffle, star expansion, circled
product), exact nested harmonic sums, iterated integrals on words and
labelled posets, certified high-precision evaluation, and generators for
families of identities with a verification harness on top.
"""

from .algebra import circled_star, ky_expand, star_expand, stuffle
from .bigfloat import BigFloat
from .evaluator import EvaluationError, eval_ky, eval_li, eval_mzv, eval_word
from .expression import Expression, ky, li, mzv, zeta
from .finite import eval_formal_sum, mhs_eval, mhss_eval, parametric_star_eval
from .index import ArgumentedIndex, FormalSum, SignedIndex, idx, parse_index
from .poset import Poset, poset_extensions, poset_value
from .words import Letter, Word

__version__ = "0.1.0"

__all__ = [
    "ArgumentedIndex", "BigFloat", "EvaluationError", "Expression", "FormalSum", "Letter", "Poset",
    "SignedIndex", "Word", "circled_star", "eval_formal_sum", "eval_ky", "eval_li", "eval_mzv",
    "eval_word", "idx", "ky", "ky_expand", "li", "mhs_eval", "mhss_eval", "mzv", "parametric_star_eval",
    "parse_index", "poset_extensions", "poset_value", "star_expand", "stuffle", "zeta",
]
