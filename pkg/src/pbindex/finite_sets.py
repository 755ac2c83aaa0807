"""Finite sets of naturals stored as sorted tuples.

Cofinite subsets of the naturals are never stored directly; everything in
this package carries their (finite) complements as :class:`FiniteNatSet`.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "FiniteNatSet",
    "EMPTY",
    "union",
    "difference",
    "intersection",
    "card_identity_check",
]


@dataclass(frozen=True, init=False)
class FiniteNatSet:
    """Immutable set of non-negative integers, kept strictly increasing.

    Equality is structural, so two sets are equal exactly when their element
    tuples are.
    """

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int] = ()):
        items = sorted(set(elements))
        for e in items:
            if isinstance(e, bool) or not isinstance(e, int):
                raise TypeError(f"FiniteNatSet elements must be integers, got {e!r}")
        if items and items[0] < 0:
            raise ValueError(f"FiniteNatSet elements must be >= 0, got {items[0]}")
        object.__setattr__(self, "elements", tuple(items))

    @classmethod
    def from_json(cls, data) -> FiniteNatSet:
        if not isinstance(data, list):
            raise TypeError("a finite set is encoded as a JSON array")
        if any(b <= a for a, b in zip(data, data[1:])):
            raise ValueError("finite set elements must be strictly increasing")
        return cls(data)

    def to_json(self) -> list[int]:
        return list(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, n) -> bool:
        i = bisect_left(self.elements, n)
        return i < len(self.elements) and self.elements[i] == n

    def __bool__(self) -> bool:
        return bool(self.elements)

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self.elements)) + "}"

    def max(self, default: int = -1) -> int:
        return self.elements[-1] if self.elements else default

    def __or__(self, other: FiniteNatSet) -> FiniteNatSet:
        return union(self, other)

    def __sub__(self, other: FiniteNatSet) -> FiniteNatSet:
        return difference(self, other)

    def __and__(self, other: FiniteNatSet) -> FiniteNatSet:
        return intersection(self, other)


EMPTY = FiniteNatSet()


def _merge(x: tuple[int, ...], y: tuple[int, ...], keep_x: bool, keep_y: bool, keep_both: bool):
    # linear merge of two sorted tuples; the flags pick which regions survive
    out = []
    i = j = 0
    while i < len(x) and j < len(y):
        a, b = x[i], y[j]
        if a < b:
            if keep_x:
                out.append(a)
            i += 1
        elif b < a:
            if keep_y:
                out.append(b)
            j += 1
        else:
            if keep_both:
                out.append(a)
            i += 1
            j += 1
    if keep_x:
        out.extend(x[i:])
    if keep_y:
        out.extend(y[j:])
    res = FiniteNatSet.__new__(FiniteNatSet)
    object.__setattr__(res, "elements", tuple(out))
    return res


def union(x: FiniteNatSet, y: FiniteNatSet) -> FiniteNatSet:
    return _merge(x.elements, y.elements, True, True, True)


def difference(x: FiniteNatSet, y: FiniteNatSet) -> FiniteNatSet:
    return _merge(x.elements, y.elements, True, False, False)


def intersection(x: FiniteNatSet, y: FiniteNatSet) -> FiniteNatSet:
    return _merge(x.elements, y.elements, False, False, True)


def card_identity_check(x: FiniteNatSet, y: FiniteNatSet) -> bool:
    """Check ``|x - y| + |y| == |y - x| + |x|``.

    Both sides count ``x | y``; the check holds for every pair of finite sets
    and is the bookkeeping step behind additivity of the index.
    """
    return len(difference(x, y)) + len(y) == len(difference(y, x)) + len(x)
