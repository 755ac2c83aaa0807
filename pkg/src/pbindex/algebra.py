"""Composition, inversion, extension and factorization of partial bijections.

Argument order follows function composition: ``compose(g, f)`` is ``g`` after
``f``.
"""

from __future__ import annotations

from typing import Literal

from .errors import IndexMismatch, NonZeroIndex
from .partial_bijection import (
    PartialBijection,
    Permutation,
    apply,
    codomain_complement,
    index,
)

__all__ = [
    "compose",
    "inverse",
    "sandwich_identities",
    "extend_to_permutation",
    "permutation_sandwich_index",
    "factor_left",
    "factor_right",
    "power",
]


def compose(g: PartialBijection, f: PartialBijection) -> PartialBijection:
    """Return ``g o f`` on the ``f``-preimage of ``B_f & A_g``.

    Only finitely many points can deviate from the combined shift: the
    exception points of ``f`` and the ``f``-preimages of the exception
    points of ``g``. Likewise the new holes are the holes of ``f`` plus the
    ``f``-preimages of the holes of ``g``.
    """
    holes = set(f.holes)
    for h in g.holes:
        n = f.preimage(h)
        if n is not None:
            holes.add(n)

    candidates = set(f._table)
    for a in g._table:
        n = f.preimage(a)
        if n is not None:
            candidates.add(n)
    table = {}
    for n in candidates - holes:
        table[n] = apply(g, apply(f, n))
    return PartialBijection(f.shift + g.shift, holes, table)


def inverse(f: PartialBijection) -> PartialBijection:
    return PartialBijection(
        -f.shift,
        codomain_complement(f),
        {b: a for a, b in f.exceptions},
    )


def power(f: PartialBijection, n: int) -> PartialBijection:
    """``f`` composed with itself ``n`` times; negative ``n`` uses the inverse."""
    base = f if n >= 0 else inverse(f)
    out = PartialBijection()
    for _ in range(abs(n)):
        out = compose(base, out)
    return out


def sandwich_identities(f: PartialBijection) -> tuple[PartialBijection, PartialBijection]:
    """``(f^-1 o f, f o f^-1)``: the identity restricted to ``A_f`` and to ``B_f``."""
    g = inverse(f)
    return compose(g, f), compose(f, g)


def extend_to_permutation(f: PartialBijection) -> Permutation:
    """Fill the holes of an index-zero map to get a permutation of the naturals.

    The i-th smallest hole is sent to the i-th smallest point missing from
    the image.
    """
    gaps = codomain_complement(f)
    if len(f.holes) != len(gaps):
        raise NonZeroIndex(f"index is {len(f.holes) - len(gaps)}, a permutation needs index 0")
    table = dict(f.exceptions)
    table.update(zip(f.holes, gaps))
    return Permutation(f.shift, (), table)


def permutation_sandwich_index(
    f: PartialBijection, p: Permutation, side: Literal["left", "right"] = "left"
) -> int:
    if side == "left":
        return index(compose(p, f))
    if side == "right":
        return index(compose(f, p))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _check_equal_index(f, g):
    i, j = index(f), index(g)
    if i != j:
        raise IndexMismatch(f"indices differ: {i} != {j}")


def factor_left(f: PartialBijection, g: PartialBijection) -> Permutation:
    """A permutation ``lam`` with ``compose(lam, f)`` almost equal to ``g``."""
    _check_equal_index(f, g)
    return extend_to_permutation(compose(g, inverse(f)))


def factor_right(f: PartialBijection, g: PartialBijection) -> Permutation:
    """A permutation ``rho`` with ``compose(f, rho)`` almost equal to ``g``."""
    _check_equal_index(f, g)
    return extend_to_permutation(compose(inverse(f), g))
