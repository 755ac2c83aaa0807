"""Total self-maps that are bijective off a finite set.

A :class:`NearBijection` is given by a prefix table ``f(0), ..., f(T-1)`` and
a tail ``f(n) = n + shift`` for ``n >= T``. Such a map can fail to be
injective or onto, but only on finite sets. Its *monoset* is the set of
points whose value has exactly one preimage.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import MalformedMap, NegativeValue
from .finite_sets import FiniteNatSet
from .partial_bijection import PartialBijection, codomain_complement

__all__ = [
    "NearBijection",
    "monoset_complement",
    "range_complement",
    "legacy_index",
    "restrict_to_partial",
    "reconciliation_check",
]


@dataclass(frozen=True)
class NearBijection:
    prefix: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        prefix = tuple(self.prefix)
        if any(isinstance(v, bool) or not isinstance(v, int) for v in prefix):
            raise MalformedMap("prefix values must be integers")
        if isinstance(self.shift, bool) or not isinstance(self.shift, int):
            raise MalformedMap("shift must be an integer")
        if any(v < 0 for v in prefix):
            raise NegativeValue("prefix values must be naturals")
        if len(prefix) + self.shift < 0:
            raise NegativeValue(f"tail point {len(prefix)} would map to {len(prefix) + self.shift}")
        object.__setattr__(self, "prefix", prefix)

    @property
    def T(self) -> int:
        return len(self.prefix)

    def __call__(self, n: int) -> int:
        return self.prefix[n] if n < len(self.prefix) else n + self.shift

    def structural_bound(self) -> int:
        top = max(self.prefix, default=-1) + 1
        return 1 + max(self.T, top) + 2 * abs(self.shift)

    def to_json(self) -> dict:
        return {"prefix": list(self.prefix), "shift": self.shift}

    @classmethod
    def from_json(cls, data) -> NearBijection:
        if not isinstance(data, dict) or not isinstance(data.get("prefix"), list):
            raise MalformedMap('a near-bijection is encoded as {"prefix": [...], "shift": int}')
        return cls(tuple(data["prefix"]), data.get("shift", 0))


def monoset_complement(f: NearBijection) -> FiniteNatSet:
    # a tail point n + k collides only with prefix points that share its value
    k, T = f.shift, f.T
    counts = Counter(f.prefix)
    shared = []
    for v in counts:
        if v - k >= T:
            counts[v] += 1
            shared.append(v - k)
    shared.extend(i for i, v in enumerate(f.prefix) if counts[v] > 1)
    return FiniteNatSet(shared)


def range_complement(f: NearBijection) -> FiniteNatSet:
    # the tail covers [T + k, inf)
    hit = set(f.prefix)
    return FiniteNatSet(v for v in range(f.T + f.shift) if v not in hit)


def legacy_index(f: NearBijection) -> int:
    """``|M'| - |f(M')| - |f(N)'|`` with ``M`` the monoset."""
    shared = monoset_complement(f)
    return len(shared) - len({f(n) for n in shared}) - len(range_complement(f))


def restrict_to_partial(f: NearBijection) -> PartialBijection:
    """Drop every point that shares its value; what remains is injective."""
    shared = monoset_complement(f)
    table = {i: v for i, v in enumerate(f.prefix) if i not in shared}
    return PartialBijection(f.shift, shared, table)


def reconciliation_check(f: NearBijection) -> bool:
    """Check ``|f(M)'| = |f(N)'| + |f(M')|``, each side counted separately."""
    lhs = len(codomain_complement(restrict_to_partial(f)))
    shared = monoset_complement(f)
    return lhs == len(range_complement(f)) + len({f(n) for n in shared})
