"""
Labeled finite posets and their iterated integrals.

A node carries a label delta in {0} or a nonzero rational: 0 stands for
dt/t and a for dt/(1 - a t).  The integral of a poset is taken over all
points of (0, 1)^X respecting the order (x < y means t_x < t_y), so it is
the sum of the word integrals of its linear extensions.  A linear
extension listed bottom to top gives the word read top to bottom.

JSON layout::

    {"nodes": [{"id": "x1", "label": "1"}, {"id": "x2", "label": "a1"}],
     "cover": [["x1", "x2"]],
     "alphas": {"a1": "-1"}}

where ``["x1", "x2"]`` means x1 < x2.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .bigfloat import BigFloat
from .index import FormalSum, SignedIndex, as_fraction, format_fraction
from .words import Word

MAX_EXTENSIONS = 10 ** 6


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class Poset:
    ids: tuple
    labels: tuple
    cover: tuple  # pairs (i, j) of node positions with i < j in the order
    below: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        n = len(self.ids)
        if len(set(self.ids)) != n:
            raise PosetError("duplicate node ids")
        if len(self.labels) != n:
            raise PosetError("one label per node")
        labels = tuple(as_fraction(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        cover = tuple(sorted(set((int(a), int(b)) for a, b in self.cover)))
        for a, b in cover:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise PosetError(f"bad cover pair {(a, b)}")
        object.__setattr__(self, "cover", cover)
        object.__setattr__(self, "below", _closure(n, cover))

    @classmethod
    def build(cls, labels, cover, ids=None) -> "Poset":
        labels = tuple(labels)
        if ids is None:
            ids = tuple(f"x{i + 1}" for i in range(len(labels)))
        return cls(tuple(ids), labels, tuple(cover))

    @classmethod
    def chain(cls, labels_bottom_to_top) -> "Poset":
        labels = tuple(labels_bottom_to_top)
        return cls.build(labels, [(i, i + 1) for i in range(len(labels) - 1)])

    def __len__(self):
        return len(self.ids)

    def less(self, a: int, b: int) -> bool:
        return bool(self.below[b] >> a & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.less(a, b) or self.less(b, a)

    def maximal(self) -> list:
        n = len(self)
        return [i for i in range(n) if not any(self.less(i, j) for j in range(n))]

    def minimal(self) -> list:
        return [i for i in range(len(self)) if self.below[i] == 0]

    def is_admissible(self) -> bool:
        return (all(self.labels[i] != 1 for i in self.maximal())
                and all(self.labels[i] != 0 for i in self.minimal()))

    def is_total(self) -> bool:
        n = len(self)
        return all(self.comparable(a, b) for a in range(n) for b in range(a + 1, n))

    def adjoin(self, a: int, b: int) -> "Poset":
        """The poset with the extra relation a < b (a, b incomparable)."""
        if self.comparable(a, b):
            raise PosetError("nodes are already comparable")
        return Poset(self.ids, self.labels, self.cover + ((a, b),))

    def __str__(self):
        labs = ",".join(format_fraction(x) for x in self.labels)
        rel = " ".join(f"{self.ids[a]}<{self.ids[b]}" for a, b in self.cover)
        return f"{{{labs} | {rel}}}"


def _closure(n: int, cover) -> tuple:
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in cover:
        succ[a].append(b)
        indeg[b] += 1
    below = [0] * n
    order = [i for i in range(n) if indeg[i] == 0]
    seen = 0
    while order:
        a = order.pop()
        seen += 1
        for b in succ[a]:
            below[b] |= below[a] | (1 << a)
            indeg[b] -= 1
            if indeg[b] == 0:
                order.append(b)
    if seen != n:
        raise PosetError("order relation has a cycle")
    return tuple(below)


# ---------------------------------------------------------------------------
# JSON


def poset_from_json(data) -> Poset:
    if isinstance(data, str):
        data = json.loads(data)
    alphas = {k: as_fraction(str(v)) for k, v in data.get("alphas", {}).items()}
    ids, labels = [], []
    for node in data["nodes"]:
        ids.append(str(node["id"]))
        lab = str(node["label"]).strip()
        if lab in alphas:
            labels.append(alphas[lab])
        else:
            try:
                labels.append(as_fraction(lab))
            except (ValueError, ZeroDivisionError):
                raise PosetError(f"unknown label {lab!r}") from None
    pos = {x: i for i, x in enumerate(ids)}
    cover = []
    for a, b in data.get("cover", []):
        if a not in pos or b not in pos:
            raise PosetError(f"cover pair refers to unknown node {(a, b)}")
        cover.append((pos[a], pos[b]))
    return Poset(tuple(ids), tuple(labels), tuple(cover))


def poset_to_json(X: Poset) -> dict:
    return {
        "nodes": [{"id": i, "label": format_fraction(lab)} for i, lab in zip(X.ids, X.labels)],
        "cover": [[X.ids[a], X.ids[b]] for a, b in X.cover],
    }


# ---------------------------------------------------------------------------
# linear extensions


def count_linear_extensions(X: Poset) -> int:
    """Number of linear extensions, by memoised counting over down-sets."""
    n = len(X)
    full = (1 << n) - 1
    below = X.below

    @lru_cache(maxsize=None)
    def count(mask: int) -> int:
        if mask == full:
            return 1
        total = 0
        for i in range(n):
            if not mask >> i & 1 and below[i] & ~mask == 0:
                total += count(mask | (1 << i))
        return total

    return count(0)


def linear_extensions(X: Poset, cap: int = MAX_EXTENSIONS):
    """Yield linear extensions bottom to top, depth first in node order."""
    if count_linear_extensions(X) > cap:
        raise PosetError(f"more than {cap} linear extensions")
    n = len(X)
    below = X.below
    order: list = []

    def rec(mask):
        if len(order) == n:
            yield tuple(order)
            return
        for i in range(n):
            if not mask >> i & 1 and below[i] & ~mask == 0:
                order.append(i)
                yield from rec(mask | (1 << i))
                order.pop()

    yield from rec(0)


def extension_word(X: Poset, ext) -> Word:
    return Word.of(*[X.labels[i] for i in reversed(ext)])


def poset_extensions(X: Poset, cap: int = MAX_EXTENSIONS) -> FormalSum:
    """The integral of X as a formal sum of words, one per linear extension."""
    if not X.is_admissible():
        raise PosetError("poset is not admissible")
    acc: Counter = Counter(extension_word(X, e) for e in linear_extensions(X, cap))
    return FormalSum(acc.items())


def decompose(X: Poset, pick: str = "first", cap: int = MAX_EXTENSIONS) -> FormalSum:
    """Split on an incomparable pair, I(X) = I(X + a<b) + I(X + b<a), until total.

    ``pick`` chooses which incomparable pair is used at each step
    ("first" or "last" in lexicographic order); the result must not depend
    on it.
    """
    if count_linear_extensions(X) > cap:
        raise PosetError(f"more than {cap} linear extensions")
    acc: Counter = Counter()
    stack = [X]
    while stack:
        Y = stack.pop()
        n = len(Y)
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if not Y.comparable(a, b)]
        if not pairs:
            ext = sorted(range(n), key=lambda i: bin(Y.below[i]).count("1"))
            acc[extension_word(Y, ext)] += 1
            continue
        a, b = pairs[0] if pick == "first" else pairs[-1]
        stack.append(Y.adjoin(a, b))
        stack.append(Y.adjoin(b, a))
    return FormalSum(acc.items())


def poset_value(X: Poset, prec: int = 128) -> BigFloat:
    from .evaluator import GUARD, eval_word

    total = BigFloat(0, 0, prec + GUARD)
    fs = poset_extensions(X)
    for w in fs:
        total = total + eval_word(w, prec) * fs[w]
    return total


# ---------------------------------------------------------------------------
# the two-column diagrams of the integral = series identity


def integral_series_poset(k: SignedIndex, l: SignedIndex) -> Poset:
    """Diagram whose integral is the signed Kaneko-Yamamoto value of (k, l).

    Main chain, bottom to top: for j = r..1 a node labelled by the partial
    sign product a'_j followed by k_j - 1 zeros, then l_1 zeros.  Each
    further l_j adds a chain (one node labelled 1, then l_j - 1 zeros)
    whose bottom lies below the top of the previous block.
    """
    if not k or not l or any(p < 0 for p in l.parts):
        raise PosetError("need non-empty k and a positive non-empty l")
    cum = []
    acc = 1
    for s in k.signs:
        acc *= s
        cum.append(acc)
    labels: list = []
    cover: list = []

    def push(lab, link_from=None):
        labels.append(Fraction(lab))
        i = len(labels) - 1
        if link_from is not None:
            cover.append((link_from, i))
        return i

    prev = None
    for j in range(k.depth - 1, -1, -1):
        prev = push(cum[j], prev)
        for _ in range(abs(k[j]) - 1):
            prev = push(0, prev)
    for _ in range(l[0]):
        prev = push(0, prev)
    top = prev
    for lj in l.parts[1:]:
        b = push(1)
        cover.append((b, top))
        cur = b
        for _ in range(lj - 1):
            cur = push(0, cur)
        top = cur
    return Poset.build(labels, cover)
