"""Brute-force recounting on a finite window.

The oracle writes a map out as a table of its first ``W`` values, straight
from the raw fields, and recounts everything by scanning that table. It
never calls the structural routines it is meant to check.

Why a window suffices: once ``W`` is at least the structural bound, every
point ``n >= W`` is a tail point with value ``n + shift >= W + shift``. So a
value ``m < W + shift`` is in the image exactly when it appears in the table.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Optional, Union

from . import _kernels
from .algebra import compose
from .errors import WindowTooSmall
from .finite_sets import FiniteNatSet
from .near_bijection import NearBijection, legacy_index, monoset_complement, range_complement
from .partial_bijection import PartialBijection, codomain_complement, index, structural_bound

__all__ = [
    "WindowTable",
    "bound_of",
    "materialize",
    "oracle_index",
    "oracle_codomain_complement",
    "oracle_compose",
    "oracle_compose_check",
    "oracle_disagreements",
    "oracle_monoset_complement",
    "oracle_range_complement",
    "check_partial",
    "check_near",
]

AnyMap = Union[PartialBijection, NearBijection]


@dataclass(frozen=True)
class WindowTable:
    """Values ``f(0), ..., f(W-1)``, with ``-1`` standing for "undefined"."""

    W: int
    values: array

    @property
    def entries(self) -> tuple[Optional[int], ...]:
        return tuple(None if v == _kernels.ABSENT else v for v in self.values)

    def __len__(self):
        return self.W


def bound_of(f: AnyMap) -> int:
    if isinstance(f, NearBijection):
        return f.structural_bound()
    return structural_bound(f)


def materialize(f: AnyMap, W: int) -> WindowTable:
    need = bound_of(f)
    if W < need:
        raise WindowTooSmall(f"window {W} is below the structural bound {need}")
    if isinstance(f, NearBijection):
        values = _kernels.fill_table(f.shift, (), range(f.T), f.prefix, W)
    else:
        keys = [a for a, _ in f.exceptions]
        vals = [b for _, b in f.exceptions]
        values = _kernels.fill_table(f.shift, f.holes.elements, keys, vals, W)
    return WindowTable(W, values)


def oracle_codomain_complement(t: WindowTable, shift: int) -> FiniteNatSet:
    return FiniteNatSet(_kernels.image_gaps(t.values, t.W + shift))


def oracle_index(t: WindowTable, shift: int) -> int:
    holes = _kernels.absent_positions(t.values)
    gaps = _kernels.image_gaps(t.values, t.W + shift)
    return len(holes) - len(gaps)


def oracle_compose(g: PartialBijection, f: PartialBijection, W: int) -> WindowTable:
    tf = materialize(f, W)
    tg = materialize(g, W + max(0, f.shift))
    return WindowTable(W, _kernels.compose_tables(tg.values, tf.values))


def oracle_compose_check(g: PartialBijection, f: PartialBijection, W: int) -> bool:
    """Compare ``compose(g, f)`` with the table-level composite on ``[0, W)``."""
    r = compose(g, f)
    return materialize(r, W).values == oracle_compose(g, f, W).values


def oracle_disagreements(f: PartialBijection, g: PartialBijection, W: int) -> FiniteNatSet:
    """Points below ``W`` where both maps are defined and differ."""
    return FiniteNatSet(_kernels.mismatch_positions(materialize(f, W).values, materialize(g, W).values))


def oracle_monoset_complement(t: WindowTable) -> FiniteNatSet:
    return FiniteNatSet(_kernels.shared_value_points(t.values))


def oracle_range_complement(t: WindowTable, shift: int) -> FiniteNatSet:
    return FiniteNatSet(_kernels.image_gaps(t.values, t.W + shift))


def check_partial(f: PartialBijection, W: Optional[int] = None) -> dict:
    """Recount holes, codomain gaps and index at ``W`` and ``2W``; compare with the structure."""
    W = bound_of(f) if W is None else W
    report = {"window": W, "index": index(f), "checks": {}}
    for w in (W, 2 * W):
        t = materialize(f, w)
        report["checks"][str(w)] = {
            "holes": FiniteNatSet(_kernels.absent_positions(t.values)) == f.holes,
            "codomain_complement": oracle_codomain_complement(t, f.shift) == codomain_complement(f),
            "index": oracle_index(t, f.shift) == index(f),
        }
    report["ok"] = all(all(c.values()) for c in report["checks"].values())
    return report


def check_near(f: NearBijection, W: Optional[int] = None) -> dict:
    W = bound_of(f) if W is None else W
    report = {"window": W, "legacy_index": legacy_index(f), "checks": {}}
    for w in (W, 2 * W):
        t = materialize(f, w)
        shared = oracle_monoset_complement(t)
        gaps = oracle_range_complement(t, f.shift)
        recount = len(shared) - len({t.values[n] for n in shared}) - len(gaps)
        report["checks"][str(w)] = {
            "monoset_complement": shared == monoset_complement(f),
            "range_complement": gaps == range_complement(f),
            "legacy_index": recount == legacy_index(f),
        }
    report["ok"] = all(all(c.values()) for c in report["checks"].values())
    return report
