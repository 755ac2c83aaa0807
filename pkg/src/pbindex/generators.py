"""Seeded random maps for property checks and benchmarks.

Every generator takes a :class:`random.Random` so runs are reproducible.
"""

from __future__ import annotations

import random

from .algebra import compose
from .near_bijection import NearBijection
from .partial_bijection import PartialBijection, Permutation, restrict

__all__ = [
    "random_partial_bijection",
    "random_permutation",
    "random_near_bijection",
    "perturb",
    "with_index",
]


def random_partial_bijection(
    rng: random.Random,
    max_shift: int = 8,
    max_holes: int = 8,
    max_exceptions: int = 8,
    support: int = 64,
    shift: int | None = None,
) -> PartialBijection:
    """A random valid map with structure below ``support``.

    For negative shifts the points below ``-shift`` are made holes, which is
    the cheapest way to keep the tail inside the naturals.
    """
    k = rng.randint(-max_shift, max_shift) if shift is None else shift
    forced = set(range(max(0, -k)))
    extra = rng.randint(0, max(0, max_holes - len(forced)))
    holes = forced | set(rng.sample(range(support), extra))

    free = [n for n in range(support) if n not in holes]
    keys = rng.sample(free, min(len(free), rng.randint(0, max_exceptions)))
    # values the tail leaves uncovered: [0, k) and h + k for removed h
    removed = holes | set(keys)
    available = set(range(max(0, k))) | {h + k for h in removed if h + k >= 0}
    values = rng.sample(sorted(available), min(len(keys), len(available)))
    return PartialBijection(k, holes, dict(zip(keys, values)))


def random_permutation(rng: random.Random, support: int = 64, max_moved: int = 8) -> Permutation:
    moved = rng.sample(range(support), rng.randint(0, max_moved))
    images = moved[:]
    rng.shuffle(images)
    return Permutation(0, (), dict(zip(moved, images)))


def perturb(rng: random.Random, f: PartialBijection, support: int = 64) -> PartialBijection:
    """A map that differs from ``f`` on a finite set only.

    Drops a few points from the domain and pre- or post-composes with a
    finitely supported permutation.
    """
    g = restrict(f, rng.sample(range(support), rng.randint(0, 4)))
    p = random_permutation(rng, support, max_moved=6)
    return compose(p, g) if rng.random() < 0.5 else compose(g, p)


def with_index(rng: random.Random, f: PartialBijection, **kwargs) -> PartialBijection:
    """A fresh random map with the same index (that is, the same shift) as ``f``."""
    return random_partial_bijection(rng, shift=f.shift, **kwargs)


def random_near_bijection(
    rng: random.Random, max_T: int = 16, max_value: int = 32, max_shift: int = 4
) -> NearBijection:
    T = rng.randint(0, max_T)
    k = rng.randint(max(-max_shift, -T), max_shift)
    prefix = tuple(rng.randrange(max_value) for _ in range(T))
    return NearBijection(prefix, k)
