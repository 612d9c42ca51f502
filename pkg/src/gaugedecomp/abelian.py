"""Finitely generated abelian groups in invariant-factor form.

A group is stored as ``Z^free_rank (+) Z/s1 (+) ... (+) Z/sk`` with
``2 <= s1 | s2 | ... | sk``, which makes structural equality literal
equality.  Infinite cardinality and infinite element order are both
encoded as 0, matching the modulus-0 convention of the residue layer.

>>> print(direct_sum([cyclic(4), cyclic(6)]))
Z/2 (+) Z/12
>>> element_order(GroupElement(cyclic(12), (3,)))
4
>>> cardinality(AbelianGroup(0, (2, 2)))
4
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .matrices import IntMatrix, smith_invariants


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group in invariant-factor form."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        object.__setattr__(self, "torsion", tuple(int(s) for s in self.torsion))
        for s in self.torsion:
            if s < 2:
                raise ValueError(f"torsion orders must be >= 2, got {s}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(
                    f"torsion orders must form a divisibility chain, got {a} before {b}"
                )

    @classmethod
    def from_orders(cls, free_rank: int = 0, orders: Sequence[int] = ()) -> "AbelianGroup":
        """Normalize a list of cyclic orders (0 means a Z summand) to invariant factors."""
        free = free_rank + sum(1 for s in orders if s == 0)
        finite = [abs(s) for s in orders if s != 0 and abs(s) != 1]
        if not finite:
            return cls(free, ())
        chain = smith_invariants(IntMatrix.diagonal(finite))
        return cls(free, tuple(s for s in chain if s > 1))

    @property
    def generator_count(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.generator_count)

    def to_dict(self) -> dict:
        return {"free": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, data: dict) -> "AbelianGroup":
        return cls.from_orders(int(data.get("free", 0)), data.get("torsion", ()))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{s}" for s in self.torsion)
        return " (+) ".join(parts) if parts else "0"


Z = AbelianGroup(1, ())
TRIVIAL_GROUP = AbelianGroup(0, ())


def cyclic(m: int) -> AbelianGroup:
    """The cyclic group Z/m; m == 0 gives Z and m == 1 the trivial group."""
    return AbelianGroup.from_orders(0, (m,))


@dataclass(frozen=True)
class GroupElement:
    """An element given by coefficients over the group's generators.

    Free coordinates come first, then one coordinate per torsion order,
    reduced into [0, s_j).
    """

    group: AbelianGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.generator_count:
            raise ValueError(
                f"expected {self.group.generator_count} coefficients, got {len(self.coeffs)}"
            )
        free = self.group.free_rank
        reduced = tuple(self.coeffs[:free]) + tuple(
            c % s for c, s in zip(self.coeffs[free:], self.group.torsion)
        )
        object.__setattr__(self, "coeffs", reduced)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.group != self.group:
            raise ValueError("elements live in different groups")
        return GroupElement(
            self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, c: int) -> "GroupElement":
        if not isinstance(c, int):
            return NotImplemented
        return GroupElement(self.group, tuple(c * v for v in self.coeffs))

    __mul__ = __rmul__

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"


def direct_sum(groups: Iterable[AbelianGroup]) -> AbelianGroup:
    """Direct sum, renormalized to invariant-factor form.

    >>> print(direct_sum([Z, Z]))
    Z^2
    >>> direct_sum([cyclic(2), cyclic(2), Z]).torsion
    (2, 2)
    """
    free = 0
    orders: list[int] = []
    for g in groups:
        free += g.free_rank
        orders.extend(g.torsion)
    return AbelianGroup.from_orders(free, orders)


def element_order(x: GroupElement) -> int:
    """Least n >= 1 with n*x == 0, or 0 when no such n exists."""
    free = x.group.free_rank
    if any(c != 0 for c in x.coeffs[:free]):
        return 0
    n = 1
    for c, s in zip(x.coeffs[free:], x.group.torsion):
        n = math.lcm(n, s // math.gcd(s, c))
    return n


def cardinality(g: AbelianGroup) -> int:
    """Number of elements, or 0 for an infinite group."""
    if g.free_rank > 0:
        return 0
    return math.prod(g.torsion)
