"""
Signed indices, formal sums of indices, and polylogarithm argument data.

A signed index is stored as a tuple of nonzero integers: the absolute
value is the exponent and a negative entry is a barred (alternating)
coordinate.  So ``SignedIndex((-2, 3, -1, 4))`` is the index usually
written with bars over the first and third entries.

    >>> k = parse_index("-2,3,-1,4")
    >>> k.depth, k.weight, k.signs
    (4, 10, (-1, 1, -1, 1))
    >>> format_index(k)
    '-2,3,-1,4'
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

RationalLike = Union[int, Fraction, str]


def as_fraction(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused on purpose: every argument in this package is exact.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=False)
class SignedIndex:
    """Immutable composition with per-part signs."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for p in parts:
            if p == 0:
                raise ValueError("index entries must be nonzero")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "SignedIndex":
        out = []
        for e, s in pairs:
            if e < 1 or s not in (1, -1):
                raise ValueError(f"bad (exponent, sign) pair {(e, s)}")
            out.append(e * s)
        return cls(tuple(out))

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(abs(p) for p in self.parts)

    @property
    def exponents(self) -> tuple:
        return tuple(abs(p) for p in self.parts)

    @property
    def signs(self) -> tuple:
        return tuple(1 if p > 0 else -1 for p in self.parts)

    def pairs(self):
        return tuple((abs(p), 1 if p > 0 else -1) for p in self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return SignedIndex(self.parts[i])
        return self.parts[i]

    def __add__(self, other):
        if isinstance(other, SignedIndex):
            return SignedIndex(self.parts + other.parts)
        if isinstance(other, tuple):
            return SignedIndex(self.parts + other)
        return NotImplemented

    def __bool__(self):
        return bool(self.parts)

    def sort_key(self):
        return (self.depth, self.exponents, self.signs)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self):
        return f"SignedIndex({self.parts!r})"


EMPTY = SignedIndex(())


def idx(*parts) -> SignedIndex:
    """Shorthand: ``idx(2, -1)`` or ``idx((2, -1))``."""
    if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
        parts = tuple(parts[0])
    return SignedIndex(tuple(parts))


def parse_index(text: str) -> SignedIndex:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    if not text:
        return EMPTY
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            v = int(tok)
        except ValueError:
            raise ValueError(f"malformed index token {tok!r}") from None
        if v == 0:
            raise ValueError("index entries must be nonzero")
        out.append(v)
    return SignedIndex(tuple(out))


def format_index(k: SignedIndex) -> str:
    return ",".join(str(p) for p in k.parts)


def is_admissible(k: SignedIndex) -> bool:
    # only a leading unbarred 1 makes the infinite sum diverge
    return not k.parts or k.parts[0] != 1


def repeat_block(block: Sequence[int], d: int) -> tuple:
    if d < 0:
        raise ValueError("repetition count must be nonnegative")
    return tuple(block) * d


def ones(d: int) -> tuple:
    """The block {1}_d; d = -1 is never valid data."""
    return repeat_block((1,), d)


def box_join(a: int, p: int, b: int) -> tuple:
    """a, then p-1 ones, then b; when p = 0 the two ends fuse into a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("box_join needs a, b >= 1")
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p == 0:
        return (a + b - 1,)
    return (a,) + ones(p - 1) + (b,)


def diamond_join(a, p: int, b) -> tuple:
    """Like box_join, but the p = 0 fusion multiplies the two ends."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p == 0:
        return (a * b,)
    return (a,) + (1,) * (p - 1) + (b,)


def box_chain(head: int, steps: Sequence[tuple[int, int]]) -> tuple:
    """Fold ``head ⊡_{p1} b1 ⊡_{p2} b2 ...`` left to right.

    ``steps`` is a sequence of ``(p, b)``.  The head may be 0 or 1 to model
    a virtual leading entry that only exists to absorb a p = 0 fusion.
    """
    out = [head]
    for p, b in steps:
        if p < 0:
            raise ValueError("p must be nonnegative")
        if p == 0:
            out[-1] = out[-1] + b - 1
        else:
            out.extend([1] * (p - 1))
            out.append(b)
    return tuple(out)


def diamond_chain(head, steps) -> tuple:
    out = [head]
    for p, b in steps:
        if p == 0:
            out[-1] = out[-1] * b
        else:
            out.extend([1] * (p - 1))
            out.append(b)
    return tuple(out)


class FormalSum(Mapping):
    """Rational linear combination of hashable keys (indices or words).

    Always stored canonically: equal keys merged, zero coefficients dropped.
    Iteration follows the printing order (deepest first, then
    lexicographically largest), which is what the CLI prints.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                c = as_fraction(c)
                if c:
                    acc[key] = acc.get(key, 0) + c
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def single(cls, key, coeff=1):
        return cls({key: coeff})

    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self):
        return iter(sorted(self._terms, key=_key_order, reverse=True))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, FormalSum):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return FormalSum(acc)

    def __neg__(self):
        return FormalSum({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FormalSum":
        c = as_fraction(c)
        return FormalSum({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def map_keys(self, f) -> "FormalSum":
        acc: dict = {}
        for k, v in self._terms.items():
            nk = f(k)
            acc[nk] = acc.get(nk, 0) + v
        return FormalSum(acc)

    def total_coefficient(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for key in self:
            c = self._terms[key]
            mag = abs(c)
            body = str(key) if mag == 1 else f"{format_fraction(mag)}*{key}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"FormalSum({str(self)})"


def _key_order(key):
    sk = getattr(key, "sort_key", None)
    return sk() if sk is not None else key


@dataclass(frozen=True)
class ArgumentedIndex:
    """Exponents s_1..s_r with rational arguments z_1..z_r.

    The value is sum over n_1 > ... > n_r >= 1 of prod z_j^{n_j} / n_j^{s_j}.
    """

    exponents: tuple
    args: tuple

    def __post_init__(self):
        ex = tuple(int(e) for e in self.exponents)
        zs = tuple(as_fraction(z) for z in self.args)
        if len(ex) != len(zs):
            raise ValueError("exponents and args must have equal length")
        if any(e < 1 for e in ex):
            raise ValueError("exponents must be positive")
        if any(z == 0 for z in zs):
            raise ValueError("arguments must be nonzero")
        object.__setattr__(self, "exponents", ex)
        object.__setattr__(self, "args", zs)

    @property
    def depth(self):
        return len(self.exponents)

    @property
    def weight(self):
        return sum(self.exponents)

    def cumulative(self) -> tuple:
        """Partial products z_1, z_1 z_2, ...; these are the word letters."""
        out, acc = [], Fraction(1)
        for z in self.args:
            acc *= z
            out.append(acc)
        return tuple(out)

    def is_admissible(self) -> bool:
        if not self.exponents:
            return True
        z1 = self.args[0]
        if abs(z1) > 1:
            return False
        if z1 == 1 and self.exponents[0] < 2:
            return False
        # the partial products are the word letters; outside [-1, 1] the
        # defining series no longer converges
        return all(-1 <= b <= 1 for b in self.cumulative())

    def as_signed(self):
        """The SignedIndex when every argument is +-1, else None."""
        if all(z in (1, -1) for z in self.args):
            return SignedIndex(tuple(e if z == 1 else -e for e, z in zip(self.exponents, self.args)))
        return None

    def sort_key(self):
        return (self.depth, self.exponents, self.args)

    def __str__(self):
        return "(" + ",".join(map(str, self.exponents)) + "; " + ",".join(format_fraction(z) for z in self.args) + ")"


def signed_to_argumented(k: SignedIndex, head_arg: RationalLike = 1) -> ArgumentedIndex:
    """Alternating MZV data as polylog data; ``head_arg`` scales z_1."""
    zs = [Fraction(s) for s in k.signs]
    if zs:
        zs[0] *= as_fraction(head_arg)
    return ArgumentedIndex(k.exponents, tuple(zs))
