"""
Polynomial expressions over evaluable atoms, with rational coefficients.

An :class:`Expression` is a finite map from monomials (sorted tuples of
``(atom, power)``) to Fractions.  Generators build both sides of an identity
as Expressions; numbers only appear when :meth:`Expression.evaluate` is
called.

    >>> e = zeta(2) * zeta(3) - zeta(3, 2) - zeta(2, 3) - zeta(5)
    >>> print(e)
    -zeta(2,3) - zeta(3,2) - zeta(5) + zeta(2)*zeta(3)
    >>> e.evaluate(96).value < 1e-25
    True
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import mpmath

from . import evaluator as ev
from .bigfloat import BigFloat
from .index import (ArgumentedIndex, SignedIndex, as_fraction, format_fraction, idx,  # noqa: F401
                    signed_to_argumented)
from .words import Word, format_word, word_to_index


class Atom:
    """Base class; subclasses are frozen dataclasses."""

    kind = "atom"

    def key(self):
        return (self.kind, str(self))

    def evaluate(self, prec: int) -> BigFloat:
        raise NotImplementedError

    def evaluate_alt(self, prec: int):
        """Independent second route, or None when there is none."""
        return None

    def canonical(self) -> "Expression":
        return Expression.atom(self)


@dataclass(frozen=True)
class MZV(Atom):
    index: SignedIndex
    kind = "zeta"

    @classmethod
    def of(cls, *parts) -> "Expression":
        return Expression.atom(cls(idx(*parts)))

    def __str__(self):
        return "zeta(" + ",".join(map(str, self.index.parts)) + ")"

    def evaluate(self, prec):
        return ev.eval_mzv(self.index, prec)

    def evaluate_alt(self, prec):
        return ev.eval_mzv_dual(self.index, prec)

    def canonical(self):
        if not self.index:
            return Expression.const(1)
        if self.index.depth == 1:
            s = self.index[0]
            return Expression.atom(Zeta(abs(s), 1 if s > 0 else -1))
        return Expression.atom(self)


@dataclass(frozen=True)
class Zeta(Atom):
    """Single zeta value; sign -1 is the alternating sum_n (-1)^n / n^s."""

    s: int
    sign: int = 1
    kind = "zeta"

    def __str__(self):
        return f"zeta({self.s * self.sign})"

    def evaluate(self, prec):
        return ev.zeta_single(self.s, self.sign, prec)

    def evaluate_alt(self, prec):
        return ev.zeta_single(self.s, self.sign, prec, route="word")


@dataclass(frozen=True)
class Li(Atom):
    index: ArgumentedIndex
    kind = "Li"

    @classmethod
    def of(cls, exponents, args) -> "Expression":
        return Expression.atom(cls(ArgumentedIndex(tuple(exponents), tuple(args))))

    def __str__(self):
        return "Li" + str(self.index)

    def evaluate(self, prec):
        return ev.eval_li(self.index, prec)

    def evaluate_alt(self, prec):
        bs = self.index.cumulative()
        if bs and max(abs(b) for b in bs) <= Fraction(1, 2):
            return ev.eval_polylog(self.index.exponents, self.index.args, prec=prec)
        return None

    def canonical(self):
        if not self.index.exponents:
            return Expression.const(1)
        s = self.index.as_signed()
        if s is not None:
            return MZV(s).canonical()
        return Expression.atom(self)


@dataclass(frozen=True)
class LiStar(Atom):
    exponents: tuple
    z: Fraction
    kind = "Li*"

    @classmethod
    def of(cls, exponents, z) -> "Expression":
        return Expression.atom(cls(tuple(exponents), as_fraction(z)))

    def __str__(self):
        return "Li*(" + ",".join(map(str, self.exponents)) + "; " + format_fraction(self.z) + ")"

    def evaluate(self, prec):
        return ev.eval_li_star(self.exponents, self.z, prec)

    def evaluate_alt(self, prec):
        return ev.eval_li_star_words(self.exponents, self.z, prec)


@dataclass(frozen=True)
class LiXi(Atom):
    """Polylog written through its letters b_j (the partial products of the arguments)."""

    exponents: tuple
    bs: tuple
    kind = "LiXi"

    def __str__(self):
        return "LiXi(" + ",".join(map(str, self.exponents)) + "; " + ",".join(map(format_fraction, self.bs)) + ")"

    def evaluate(self, prec):
        return ev.eval_li_xi(self.exponents, self.bs, prec)

    def as_li(self) -> Li:
        zs, prev = [], Fraction(1)
        for b in self.bs:
            zs.append(Fraction(b) / prev)
            prev = Fraction(b)
        return Li(ArgumentedIndex(self.exponents, tuple(zs)))

    def canonical(self):
        return self.as_li().canonical()


@dataclass(frozen=True)
class Log(Atom):
    """log(c) for a positive rational c."""

    c: Fraction
    kind = "log"

    def __str__(self):
        return f"log({format_fraction(self.c)})"

    def evaluate(self, prec):
        return ev.log_value(self.c, prec)

    def evaluate_alt(self, prec):
        # -log(c) = Li_1(1 - c) when |1 - c| < 1
        z = 1 - self.c
        if 0 < abs(z) <= Fraction(1, 2):
            return -ev.eval_polylog((1,), (z,), prec=prec)
        return None


@dataclass(frozen=True)
class KY(Atom):
    """sum_n zeta_{n-1}(k_2..) zeta*_n(l_2..) (a_1 b_1 x)^n / n^{k_1 + l_1}.

    With ``zero_head`` the second index is (0, l_1, l_2, ...), i.e. all of
    ``l`` is the star part and the head contributes no exponent.
    """

    k: SignedIndex
    l: SignedIndex
    zero_head: bool = False
    x: Fraction = Fraction(1)
    kind = "KY"

    def __str__(self):
        lparts = ((0,) if self.zero_head else ()) + self.l.parts
        body = "({})(*)({})*".format(",".join(map(str, self.k.parts)), ",".join(map(str, lparts)))
        if self.x != 1:
            return f"KY[{body}; x={format_fraction(self.x)}]"
        return f"KY[{body}]"

    def evaluate(self, prec):
        return ev.eval_ky(self.k, self.l, self.zero_head, self.x, prec)

    def evaluate_alt(self, prec):
        if abs(self.x) < 1:
            return ev.eval_ky_series(self.k, self.l, self.zero_head, self.x, prec=prec)
        return None

    def expand(self) -> "Expression":
        from .algebra import ky_expand

        out = Expression()
        for term, c in ky_expand(self.k, self.l, self.zero_head).items():
            if self.x == 1:
                out = out + Expression.atom(MZV(term)) * c
            else:
                out = out + Expression.atom(Li(signed_to_argumented(term, self.x))) * c
        return out


@dataclass(frozen=True)
class WordIntegral(Atom):
    word: Word
    kind = "I"

    def __str__(self):
        return "I(" + format_word(self.word) + ")"

    def evaluate(self, prec):
        return ev.eval_word(self.word, prec)

    def evaluate_alt(self, prec):
        from .words import reflect_word

        c, w = reflect_word(self.word)
        return ev.eval_word(w, prec) * c

    def canonical(self):
        li, pref = word_to_index(self.word)
        return Li(li).canonical() * pref


@dataclass(frozen=True)
class PosetIntegral(Atom):
    poset: object
    kind = "Iposet"

    def __str__(self):
        return f"I[{self.poset}]"

    def evaluate(self, prec):
        from .poset import poset_value

        return poset_value(self.poset, prec)

    def canonical(self):
        from .poset import poset_extensions

        out = Expression()
        for w, c in poset_extensions(self.poset).items():
            out = out + WordIntegral(w).canonical() * c
        return out


@dataclass(frozen=True)
class PowerSeriesAtom(Atom):
    """Value at rational t of a power series with exact rational coefficients.

    ``coeffs`` lists the first coefficients exactly; past them the series is
    described by a callable-free majorant ``(C, rho)``: |c_n| <= C rho^n for
    all n >= len(coeffs), with rho * |t| < 1.
    """

    label: str
    coeffs: tuple
    t: Fraction
    majorant: tuple
    kind = "series"

    def __str__(self):
        return f"{self.label}"

    def evaluate(self, prec):
        wp = prec + ev.GUARD + 16
        with mpmath.workprec(wp):
            t = mpmath.mpf(self.t.numerator) / self.t.denominator
            acc = mpmath.mpf(0)
            tn = mpmath.mpf(1)
            for c in self.coeffs:
                acc += (mpmath.mpf(c.numerator) / c.denominator) * tn
                tn *= t
            C, rho = self.majorant
            q = abs(t) * (mpmath.mpf(rho.numerator) / rho.denominator)
            n0 = len(self.coeffs)
            tail = (mpmath.mpf(C.numerator) / C.denominator) * q ** n0 / (1 - q)
            err = tail + (n0 + 2) * mpmath.mpf(2) ** (-wp + 2) * (1 + abs(acc))
        return BigFloat(acc, err, prec + ev.GUARD)


@dataclass(frozen=True)
class HarmonicSum(Atom):
    """zeta_n(k) or, with ``star``, zeta*_n(k): a finite nested sum, exact."""

    n: int
    index: SignedIndex
    star: bool = False
    kind = "H"

    def __str__(self):
        return ("zetastar_" if self.star else "zeta_") + f"{self.n}(" + ",".join(map(str, self.index.parts)) + ")"

    def exact_value(self) -> Fraction:
        from .finite import mhs_eval, mhss_eval

        return (mhss_eval if self.star else mhs_eval)(self.n, self.index)

    def evaluate(self, prec):
        return BigFloat.exact(self.exact_value(), prec + ev.GUARD)

    def canonical(self):
        return Expression.const(self.exact_value())


def _mono_key(mono):
    return tuple((a.key(), p) for a, p in mono)


class Expression:
    """Sparse polynomial in atoms with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc: dict = {}
        if terms:
            for mono, c in (terms.items() if isinstance(terms, dict) else terms):
                c = as_fraction(c)
                if c:
                    acc[mono] = acc.get(mono, 0) + c
        self.terms = {m: c for m, c in acc.items() if c}

    # construction ---------------------------------------------------------
    @classmethod
    def const(cls, q) -> "Expression":
        return cls({(): as_fraction(q)})

    @classmethod
    def atom(cls, a: Atom, power: int = 1) -> "Expression":
        if power == 0:
            return cls.const(1)
        return cls({((a, power),): 1})

    @staticmethod
    def _lift(x) -> "Expression":
        if isinstance(x, Expression):
            return x
        if isinstance(x, Atom):
            return Expression.atom(x)
        return Expression.const(x)

    # ring operations ------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return Expression(acc)

    __radd__ = __add__

    def __neg__(self):
        return Expression({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Expression({m: c * other for m, c in self.terms.items()})
        other = self._lift(other)
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Expression(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Expression.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Expression):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    # inspection -----------------------------------------------------------
    def atoms(self) -> list:
        seen = {}
        for m in self.terms:
            for a, _ in m:
                seen[a] = None
        return sorted(seen, key=lambda a: a.key())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (len(mc[0]), _mono_key(mc[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms():
            factors = [str(a) if p == 1 else f"{a}^{p}" for a, p in mono]
            mag = abs(c)
            if not factors:
                body = format_fraction(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_fraction(mag) + "*" + "*".join(factors)
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"Expression({self})"

    # canonical form -------------------------------------------------------
    def canonical(self) -> "Expression":
        """Rewrite atoms into normal form (alternating MZVs where possible).

        Word and poset integrals become polylogs, polylogs with all
        arguments +-1 become MZVs, depth-one MZVs become single zetas.
        """
        cache: dict = {}
        out = Expression()
        for mono, c in self.terms.items():
            term = Expression.const(c)
            for a, p in mono:
                if a not in cache:
                    cache[a] = a.canonical()
                term = term * (cache[a] ** p)
            out = out + term
        return out

    # evaluation -----------------------------------------------------------
    def evaluate(self, prec: int = 128, route: str = "main") -> BigFloat:
        values = {}
        for a in self.atoms():
            v = a.evaluate_alt(prec) if route == "alt" else None
            values[a] = v if v is not None else _eval_atom(a, prec)
        total = BigFloat(0, 0, prec + ev.GUARD)
        for mono, c in self.sorted_terms():
            term = BigFloat(1, 0, prec + ev.GUARD)
            for a, p in mono:
                term = term * (values[a] ** p)
            total = total + term * c
        return total


_ATOM_CACHE: dict = {}


def _eval_atom(a: Atom, prec: int) -> BigFloat:
    key = (a, prec)
    v = _ATOM_CACHE.get(key)
    if v is None:
        v = a.evaluate(prec)
        _ATOM_CACHE[key] = v
    return v


def _mono_mul(m1, m2):
    acc: dict = {}
    for a, p in m1 + m2:
        acc[a] = acc.get(a, 0) + p
    return tuple(sorted(acc.items(), key=lambda ap: ap[0].key()))


# convenience constructors --------------------------------------------------


def zeta(*parts) -> Expression:
    """zeta(...) of a signed index; depth one gives the single-zeta atom."""
    return MZV(idx(*parts)).canonical()


def mzv(k: SignedIndex) -> Expression:
    return MZV(k).canonical()


def li(exponents, args) -> Expression:
    return Li(ArgumentedIndex(tuple(exponents), tuple(as_fraction(z) for z in args))).canonical()


def li_star(exponents, z) -> Expression:
    return LiStar.of(exponents, z)


def log(c) -> Expression:
    c = as_fraction(c)
    if c == 1:
        return Expression()
    return Expression.atom(Log(c))


def ky(k: SignedIndex, l: SignedIndex, zero_head: bool = False, x=1) -> Expression:
    return Expression.atom(KY(k, l, zero_head, as_fraction(x)))


def sum_expr(items: Iterable) -> Expression:
    out = Expression()
    for e in items:
        out = out + e
    return out
