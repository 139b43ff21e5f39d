"""
Identity instances, the family registry and a few index helpers shared by
the generators.

A generator takes integer (and sometimes rational) parameters and returns an
:class:`IdentityInstance` whose two sides are :class:`Expression` objects.
It never evaluates anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..expression import Expression, li, zeta
from ..index import as_fraction


class ParameterError(ValueError):
    """Parameters outside the stated domain of a family."""


@dataclass
class IdentityInstance:
    family: str
    params: dict
    lhs: Expression
    rhs: Expression
    mode: str = "numeric"  # "numeric" or "exact"
    notes: list = field(default_factory=list)

    def difference(self) -> Expression:
        return self.lhs - self.rhs

    def instance_id(self) -> str:
        return self.family + "[" + format_params(self.params) + "]"


@dataclass(frozen=True)
class Family:
    name: str
    generator: Callable
    params: tuple  # (name, kind) with kind in {"int", "list", "rat", "rats", "str"}
    summary: str
    grid: Callable | None = None  # () -> list of parameter dicts

    def make(self, **kw) -> IdentityInstance:
        return self.generator(**kw)


FAMILIES: dict = {}


def register(name: str, params, summary: str, grid=None):
    def deco(fn):
        FAMILIES[name] = Family(name, fn, tuple(params), summary, grid)
        return fn
    return deco


def get_family(name: str) -> Family:
    from . import load_all

    load_all()
    try:
        return FAMILIES[name]
    except KeyError:
        raise ParameterError(f"unknown family {name!r}") from None


# ---------------------------------------------------------------------------
# parameter text


def format_value(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(format_value(x) for x in v) + "]"
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def format_params(params: dict) -> str:
    return ";".join(f"{k}={format_value(v)}" for k, v in params.items())


def parse_params(text: str, spec) -> dict:
    """Parse ``m=1,2;p=0;a=-1/2`` (``;`` or ``,`` may separate keys)."""
    import re

    kinds = dict(spec)
    out: dict = {}
    if not text:
        return out
    pieces = re.split(r"[;,]?\s*([A-Za-z_]\w*)\s*=", ";" + text.strip())
    # pieces = ["", key1, val1, key2, val2, ...]
    if pieces[0].strip(" ;,"):
        raise ParameterError(f"cannot parse parameters {text!r}")
    for key, raw in zip(pieces[1::2], pieces[2::2]):
        if key not in kinds:
            raise ParameterError(f"unknown parameter {key!r}; expected one of {sorted(kinds)}")
        raw = raw.strip().strip(";,").strip("[]() ")
        items = [t.strip() for t in raw.split(",") if t.strip()] if raw else []
        kind = kinds[key]
        try:
            if kind == "int":
                if len(items) != 1:
                    raise ParameterError(f"{key} takes one integer")
                out[key] = int(items[0])
            elif kind == "list":
                out[key] = [int(t) for t in items]
            elif kind == "rat":
                if len(items) != 1:
                    raise ParameterError(f"{key} takes one rational")
                out[key] = as_fraction(items[0])
            elif kind == "rats":
                out[key] = [as_fraction(t) for t in items]
            else:
                out[key] = raw
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"bad value for {key}: {raw!r}") from exc
    return out


# ---------------------------------------------------------------------------
# index helpers


def ones(d: int, sign: int = 1) -> tuple:
    if d < 0:
        raise ParameterError("negative repetition count")
    return (sign,) * d


def Z(*blocks) -> Expression:
    """zeta of the concatenation of the given integer blocks (negative = barred)."""
    parts: list = []
    for b in blocks:
        if isinstance(b, int):
            parts.append(b)
        else:
            parts.extend(b)
    return zeta(*parts)


def LI(exponents, args) -> Expression:
    exponents, args = list(exponents), list(args)
    if len(exponents) != len(args):
        raise ParameterError(f"exponent/argument length mismatch {exponents} / {args}")
    return li(exponents, args)


def diamond(a, p: int, b) -> list:
    """a <> {1}_{p-1} <> b on argument sequences."""
    if p < 0:
        raise ParameterError("diamond with negative length")
    if p == 0:
        return [as_fraction(a) * as_fraction(b)]
    return [as_fraction(a)] + [Fraction(1)] * (p - 1) + [as_fraction(b)]


def check(cond: bool, msg: str):
    if not cond:
        raise ParameterError(msg)


def sign(n: int) -> int:
    return -1 if n % 2 else 1


def eq21_index(m, p, a) -> tuple[list, list]:
    """Exponents and arguments of the polylog attached to the word
    (w_{a_1})^{m_1} (dt/t)^{p_1} ... (w_{a_{k+1}})^{m_{k+1}}.

    Exponents ({1}_{m_1}, p_1+1, {1}_{m_2-1}, ..., p_k+1, {1}_{m_{k+1}-1});
    arguments (a_1 <> {1}_{m_1-1} <> a_2/a_1, {1}_{m_2-1}, a_3/a_2, ...).
    When m_1 = 0 the value of a_1 is ignored.
    """
    m, p = list(m), list(p)
    a = [as_fraction(x) if x is not None else Fraction(1) for x in a]
    k = len(p)
    check(len(m) == k + 1 and len(a) == k + 1, "need len(m) == len(a) == len(p) + 1")
    check(m[0] >= 0 and all(x >= 1 for x in m[1:]) and all(x >= 0 for x in p),
          f"need m_1 >= 0, m_j >= 1, p_i >= 0 (got m={m}, p={p})")
    exps = [1] * m[0]
    for j in range(k):
        exps += [p[j] + 1] + [1] * (m[j + 1] - 1)
    args = diamond(a[0], m[0], a[1] / a[0]) + [Fraction(1)] * (m[1] - 1)
    for j in range(1, k):
        args += [a[j + 1] / a[j]] + [Fraction(1)] * (m[j + 1] - 1)
    return exps, args


def L21(m, p, a) -> Expression:
    """The polylog of :func:`eq21_index` as an Expression."""
    return LI(*eq21_index(m, p, a))
