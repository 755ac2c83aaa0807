"""The group of almost-equality classes and its integer index.

For eventual-shift maps the class of ``f`` is determined by its shift alone,
so a class is stored as that integer. Index-zero classes collapse to the
identity here; classes of permutations that are not eventual shifts (the
rest of the kernel) are not representable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partial_bijection import PartialBijection, shift_map

__all__ = ["GermClass", "class_of", "class_mul", "class_inv", "Ind", "section", "U", "u_power"]


@dataclass(frozen=True)
class GermClass:
    shift: int

    def representative(self) -> PartialBijection:
        """The pure shift in this class."""
        return shift_map(self.shift)

    def __mul__(self, other: GermClass) -> GermClass:
        return class_mul(self, other)

    def __invert__(self) -> GermClass:
        return class_inv(self)

    def __pow__(self, n: int) -> GermClass:
        return GermClass(self.shift * n)

    def to_json(self) -> dict:
        return {"shift": self.shift}

    @classmethod
    def from_json(cls, data) -> GermClass:
        if not isinstance(data, dict) or not isinstance(data.get("shift"), int) or isinstance(data["shift"], bool):
            raise ValueError('a class is encoded as {"shift": int}')
        return cls(data["shift"])


IDENTITY_CLASS = GermClass(0)

# the class of n -> n + 1, which has index -1
U = GermClass(1)


def class_of(f: PartialBijection) -> GermClass:
    return GermClass(f.shift)


def class_mul(a: GermClass, b: GermClass) -> GermClass:
    return GermClass(a.shift + b.shift)


def class_inv(a: GermClass) -> GermClass:
    return GermClass(-a.shift)


def Ind(a: GermClass) -> int:
    return -a.shift


def u_power(n: int) -> GermClass:
    return U ** n


def section(n: int) -> GermClass:
    """Splitting of ``Ind``: ``n`` goes to ``U ** -n``, whose index is ``n``."""
    return u_power(-n)
