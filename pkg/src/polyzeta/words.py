"""
Iterated-integral words.

A letter is a one-form on [0, 1]: ``Letter(0)`` is dt/t and ``Letter(a)``
for a != 0 is dt/(1 - a t), so ``Letter(1)`` is dt/(1-t) and ``Letter(-1)``
is dt/(1+t).  Words are read with the leftmost letter outermost, i.e.

    I(f_1 ... f_m) = int_{1 > t_1 > ... > t_m > 0} f_1(t_1) ... f_m(t_m).

With that convention

    I(w0^{s_1-1} w_{b_1} ... w0^{s_r-1} w_{b_r}) * b_1 ... b_r
        = sum_{n_1 > ... > n_r} b_1^{n_1-n_2} ... b_r^{n_r} / (n_1^{s_1} ... n_r^{s_r})

which is the multiple polylogarithm with arguments z_j = b_j / b_{j-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .index import ArgumentedIndex, RationalLike, SignedIndex, as_fraction, format_fraction


@dataclass(frozen=True)
class Letter:
    a: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))

    @property
    def is_zero_form(self) -> bool:
        return self.a == 0

    def __str__(self):
        return "w0" if self.a == 0 else f"w[{format_fraction(self.a)}]"


OMEGA0 = Letter(0)


@dataclass(frozen=True)
class Word:
    letters: tuple

    def __post_init__(self):
        ls = tuple(x if isinstance(x, Letter) else Letter(x) for x in self.letters)
        object.__setattr__(self, "letters", ls)

    @classmethod
    def of(cls, *labels) -> "Word":
        return cls(tuple(Letter(as_fraction(a)) for a in labels))

    @property
    def labels(self) -> tuple:
        return tuple(x.a for x in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.letters[i])
        return self.letters[i]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def reversed(self) -> "Word":
        return Word(self.letters[::-1])

    def sort_key(self):
        return (len(self.letters), self.labels)

    def is_convergent(self) -> bool:
        """Non-empty, no dt/(1-t) at the top, no dt/t at the bottom, no pole inside."""
        if not self.letters:
            return True
        if self.letters[0].a == 1 or self.letters[-1].a == 0:
            return False
        return all(not (x.a > 1) for x in self.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters) if self.letters else "1"


def parse_word(text: str) -> Word:
    """Comma-separated labels, 0 for dt/t, e.g. ``"0,-1,1/2"``."""
    text = text.strip()
    if not text:
        return Word(())
    return Word.of(*[t.strip() for t in text.split(",")])


def format_word(w: Word) -> str:
    return ",".join(format_fraction(a) for a in w.labels)


def polylog_word(li: ArgumentedIndex) -> tuple[Fraction, Word]:
    """Word and scalar c with Li(li) = c * I(word)."""
    letters = []
    c = Fraction(1)
    for s, b in zip(li.exponents, li.cumulative()):
        letters.extend([OMEGA0] * (s - 1))
        letters.append(Letter(b))
        c *= b
    return c, Word(tuple(letters))


def mzv_word(k: SignedIndex) -> tuple[Fraction, Word]:
    """Word and scalar c (= +-1) with zeta(k) = c * I(word)."""
    from .index import signed_to_argumented

    return polylog_word(signed_to_argumented(k))


def word_to_index(w: Word) -> tuple[ArgumentedIndex, Fraction]:
    """Inverse of :func:`polylog_word`: returns (li, prefactor) with I(w) = prefactor * Li(li)."""
    exps, bs = [], []
    run = 0
    for x in w.letters:
        if x.a == 0:
            run += 1
        else:
            exps.append(run + 1)
            bs.append(x.a)
            run = 0
    if run or not w.letters:
        raise ValueError("word must end with a dt/(1 - a t) letter")
    zs, prev, prod = [], Fraction(1), Fraction(1)
    for b in bs:
        zs.append(b / prev)
        prev = b
        prod *= b
    li = ArgumentedIndex(tuple(exps), tuple(zs))
    if not li.is_admissible():
        raise ValueError(f"word {w} is outside the convergent polylog domain")
    return li, 1 / prod


def index_to_word(m: Sequence[int], p: Sequence[int], a: Sequence[RationalLike]) -> Word:
    """Word (dt/(1-a_1 t))^{m_1} (dt/t)^{p_1} ... (dt/(1-a_{k+1} t))^{m_{k+1}}.

    ``m`` has k+1 entries, ``p`` has k and ``a`` has k+1.  m_1 may be 0, in
    which case a_1 is irrelevant (pass anything, e.g. 1).
    """
    m, p = list(m), list(p)
    a = [as_fraction(x) for x in a]
    k = len(p)
    if len(m) != k + 1 or len(a) != k + 1:
        raise ValueError("need len(m) == len(a) == len(p) + 1")
    if m[0] < 0 or any(x < 1 for x in m[1:]) or any(x < 0 for x in p):
        raise ValueError("need m_1 >= 0, m_j >= 1, p_i >= 0")
    if m[0] > 0 and not (-1 <= a[0] < 1 and a[0] != 0):
        raise ValueError("a_1 must lie in [-1, 0) or (0, 1)")
    for x in a[1:]:
        if not (-1 <= x <= 1 and x != 0):
            raise ValueError("a_j must lie in [-1, 0) or (0, 1]")
    letters = [Letter(a[0])] * m[0]
    for j in range(k):
        letters += [OMEGA0] * p[j]
        letters += [Letter(a[j + 1])] * m[j + 1]
    return Word(tuple(letters))


def word_shape(w: Word) -> tuple[list, list, list]:
    """Read (m, p, a) back from a word built by :func:`index_to_word`.

    Consecutive letters with equal labels form one m-run.  When the word
    starts with dt/t, m_1 = 0 and a_1 is reported as 1.
    """
    runs: list = []
    for x in w.letters:
        if runs and runs[-1][0] == x.a:
            runs[-1][1] += 1
        else:
            runs.append([x.a, 1])
    m, p, a = [], [], []
    if runs and runs[0][0] == 0:
        m.append(0)
        a.append(Fraction(1))
    for lab, cnt in runs:
        if lab == 0:
            p.append(cnt)
        else:
            if len(m) > len(p):
                # two different non-zero labels in a row: p-run of length 0
                p.append(0)
            m.append(cnt)
            a.append(lab)
    return m, p, a


def reflect_letter(x: Letter) -> tuple[Fraction, Letter]:
    """Pull back under t -> 1 - t, as c * (new letter)."""
    a = x.a
    if a == 0:
        return Fraction(1), Letter(1)
    if a == 1:
        return Fraction(1), OMEGA0
    # dt/(1 - a(1-s)) = 1/(1-a) * ds/(1 - (a/(a-1)) s)
    return 1 / (1 - a), Letter(a / (a - 1))


def reflect_word(w: Word) -> tuple[Fraction, Word]:
    """(c, w') with I(w) = c * I(w'), from the substitution t -> 1 - t."""
    c = Fraction(1)
    out = []
    for x in reversed(w.letters):
        f, y = reflect_letter(x)
        c *= f
        out.append(y)
    return c, Word(tuple(out))
