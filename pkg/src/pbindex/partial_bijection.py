"""Bijections between cofinite subsets of the naturals.

A map is stored as an eventual shift ``n -> n + shift`` together with two
finite pieces of data: the *holes* (the complement of the domain) and a table
of *exceptions* (points whose value is not ``n + shift``). Every map that is a
shift outside a finite set has exactly one such description once redundant
exceptions are stripped, so dataclass equality is extensional equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Union

from .errors import HoleExceptionOverlap, MalformedMap, NegativeValue, NotInjective
from .finite_sets import FiniteNatSet

__all__ = [
    "PartialBijection",
    "Permutation",
    "INFINITE",
    "validate_and_canonicalize",
    "apply",
    "codomain_complement",
    "index",
    "restrict",
    "almost_equal",
    "disagreement_set",
    "structural_bound",
    "identity",
    "shift_map",
    "transposition",
]

ExceptionData = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class _Infinite:
    """Marker returned by :func:`disagreement_set` when two maps differ cofinitely."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _exception_pairs(exceptions: ExceptionData) -> list[tuple[int, int]]:
    items = exceptions.items() if isinstance(exceptions, Mapping) else exceptions
    pairs = []
    seen = set()
    for item in items:
        try:
            a, b = item
        except (TypeError, ValueError):
            raise MalformedMap(f"exception entry {item!r} is not a (point, value) pair") from None
        if not (_is_int(a) and _is_int(b)):
            raise MalformedMap(f"exception entry {item!r} must hold integers")
        if a < 0 or b < 0:
            raise NegativeValue(f"exception entry ({a}, {b}) leaves the naturals")
        if a in seen:
            raise MalformedMap(f"point {a} has more than one exception value")
        seen.add(a)
        pairs.append((a, b))
    return pairs


@dataclass(frozen=True, init=False, eq=False)
class PartialBijection:
    """Canonical eventual-shift bijection ``A -> B`` between cofinite sets.

    ``holes`` is the domain complement ``A'``; ``exceptions`` is a sorted
    tuple of ``(point, value)`` pairs, none of which is redundant. Instances
    are validated on construction, so every instance in circulation is a
    genuine bijection of cofinite sets.
    """

    shift: int
    holes: FiniteNatSet
    exceptions: tuple[tuple[int, int], ...]
    _table: dict = field(repr=False, compare=False, hash=False)
    _values: dict = field(repr=False, compare=False, hash=False)

    def __init__(self, shift: int = 0, holes: Iterable[int] = (), exceptions: ExceptionData = ()):
        if not _is_int(shift):
            raise MalformedMap(f"shift must be an integer, got {shift!r}")
        if not isinstance(holes, FiniteNatSet):
            holes = list(holes)
            if any(not _is_int(h) for h in holes):
                raise MalformedMap("holes must be integers")
            if any(h < 0 for h in holes):
                raise NegativeValue("holes must be naturals")
            holes = FiniteNatSet(holes)
        pairs = _exception_pairs(exceptions)

        for a, _ in pairs:
            if a in holes:
                raise HoleExceptionOverlap(f"point {a} is both a hole and an exception")
        # redundant pairs say nothing the shift does not already say
        table = {a: b for a, b in sorted(pairs) if b != a + shift}

        values: dict[int, int] = {}
        for a, b in table.items():
            if b in values:
                raise NotInjective(f"points {values[b]} and {a} both map to {b}")
            values[b] = a

        if shift < 0:
            for n in range(-shift):
                if n not in holes and n not in table:
                    raise NegativeValue(f"point {n} would map to {n + shift}")
        for b, a in values.items():
            m = b - shift
            if m >= 0 and m not in holes and m not in table:
                raise NotInjective(f"points {a} and {m} both map to {b}")

        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "holes", holes)
        object.__setattr__(self, "exceptions", tuple(table.items()))
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_values", values)

    # a Permutation equals the PartialBijection with the same data
    def __eq__(self, other):
        if not isinstance(other, PartialBijection):
            return NotImplemented
        return (self.shift, self.holes, self.exceptions) == (other.shift, other.holes, other.exceptions)

    def __hash__(self):
        return hash((self.shift, self.holes, self.exceptions))

    def __call__(self, n: int) -> Optional[int]:
        return apply(self, n)

    def __repr__(self) -> str:
        exc = ", ".join(f"{a}->{b}" for a, b in self.exceptions)
        return f"{type(self).__name__}(shift={self.shift}, holes={self.holes!r}, exceptions={{{exc}}})"

    @property
    def exception_map(self) -> dict[int, int]:
        return dict(self._table)

    def preimage(self, v: int) -> Optional[int]:
        """The unique ``n`` in the domain with ``f(n) == v``, or ``None``."""
        if v in self._values:
            return self._values[v]
        m = v - self.shift
        if m >= 0 and m not in self.holes and m not in self._table:
            return m
        return None

    def to_json(self) -> dict:
        return {
            "shift": self.shift,
            "holes": self.holes.to_json(),
            "exceptions": [[a, b] for a, b in self.exceptions],
        }

    @classmethod
    def from_json(cls, data) -> PartialBijection:
        if not isinstance(data, dict) or "shift" not in data:
            raise MalformedMap('a partial bijection is encoded as {"shift": int, "holes": [...], "exceptions": [...]}')
        holes = data.get("holes", [])
        exceptions = data.get("exceptions", [])
        if not isinstance(holes, list) or not isinstance(exceptions, list):
            raise MalformedMap("holes and exceptions must be JSON arrays")
        return cls(data["shift"], holes, exceptions)


class Permutation(PartialBijection):
    """A partial bijection with empty domain and codomain complements."""

    def __init__(self, shift: int = 0, holes: Iterable[int] = (), exceptions: ExceptionData = ()):
        super().__init__(shift, holes, exceptions)
        if self.holes or codomain_complement(self):
            raise MalformedMap("a permutation must be defined and onto everywhere")

    @classmethod
    def of(cls, f: PartialBijection) -> Permutation:
        return cls(f.shift, f.holes, f.exceptions)

    def support(self) -> FiniteNatSet:
        return FiniteNatSet(a for a, _ in self.exceptions)


def validate_and_canonicalize(shift: int, holes: Iterable[int] = (), exceptions: ExceptionData = ()) -> PartialBijection:
    return PartialBijection(shift, holes, exceptions)


def identity() -> PartialBijection:
    return Permutation()


def shift_map(k: int) -> PartialBijection:
    """The pure shift ``n -> n + k``; for negative ``k`` the points below ``-k`` are holes."""
    return PartialBijection(k, range(max(0, -k)))


def transposition(a: int, b: int) -> Permutation:
    return Permutation(0, (), {a: b, b: a})


def apply(f: PartialBijection, n: int) -> Optional[int]:
    if n in f.holes:
        return None
    v = f._table.get(n)
    return n + f.shift if v is None else v


def codomain_complement(f: PartialBijection) -> FiniteNatSet:
    """``B' = N - f(A)``, computed from the structure without scanning.

    Tail points cover ``[max(0, k), inf)`` except at ``h + k`` for each hole or
    exception point ``h``; exception values refill some of those gaps.
    """
    k = f.shift
    gaps = set(range(max(0, k)))
    gaps.update(h + k for h in f.holes if h + k >= 0)
    gaps.update(a + k for a in f._table if a + k >= 0)
    gaps.difference_update(f._values)
    return FiniteNatSet(gaps)


def index(f: PartialBijection) -> int:
    return len(f.holes) - len(codomain_complement(f))


def restrict(f: PartialBijection, removed: Iterable[int]) -> PartialBijection:
    removed = removed if isinstance(removed, FiniteNatSet) else FiniteNatSet(removed)
    if not removed:
        return f
    table = {a: b for a, b in f._table.items() if a not in removed}
    return PartialBijection(f.shift, f.holes | removed, table)


def disagreement_set(f: PartialBijection, g: PartialBijection):
    """Points of the common domain where ``f`` and ``g`` differ.

    Returns :data:`INFINITE` when the shifts differ, since the maps then
    disagree at every large point.
    """
    if f.shift != g.shift:
        return INFINITE
    out = []
    for n in set(f._table) | set(g._table):
        if n in f.holes or n in g.holes:
            continue
        if apply(f, n) != apply(g, n):
            out.append(n)
    return FiniteNatSet(out)


def almost_equal(f: PartialBijection, g: PartialBijection) -> bool:
    return disagreement_set(f, g) is not INFINITE


def structural_bound(f: PartialBijection) -> int:
    """Window size past which ``f`` is a pure shift and both complements are exhausted."""
    top = max(
        0,
        f.holes.max(),
        max(f._table, default=0),
        max(f._values, default=0),
    )
    return 1 + top + 2 * abs(f.shift)

