"""Exact integer and residue arithmetic.

A modulus is a non-negative integer; modulus 0 stands for the ring of
integers itself, so a single code path covers both Z and Z/m.  All values
are Python ints, hence arbitrary precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Modulus:
    """A residue modulus; ``m == 0`` means "work over the integers"."""

    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"modulus must be non-negative, got {self.m}")

    @property
    def is_integers(self) -> bool:
        return self.m == 0

    def reduce(self, value: int) -> int:
        """Canonical representative: in [0, m) for m > 0, the value itself for m == 0."""
        return value if self.m == 0 else value % self.m

    def __str__(self):
        return "Z" if self.m == 0 else f"Z/{self.m}"


INTEGERS = Modulus(0)


@dataclass(frozen=True)
class Residue:
    """An element of Z/m (of Z when m == 0), stored canonically.

    Canonical storage makes residues hashable and directly comparable.
    """

    modulus: Modulus
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.modulus.reduce(self.value))

    def __str__(self):
        if self.modulus.is_integers:
            return str(self.value)
        return f"{self.value} (mod {self.modulus.m})"


def bezout(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, u, v) with u*a + v*b == g == gcd(a, b) >= 0.

    gcd(0, 0) is 0 by convention, certified by (0, 0, 0).
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def gcd_mod(modulus: Modulus, xs: Iterable[Residue | int]) -> int:
    """gcd of the representatives of ``xs`` together with the modulus itself.

    For m == 0 this is the plain gcd of the values; for m > 0 the result
    divides m.  An all-zero input over Z gives 0 (the "infinite order"
    marker used throughout the package).  The result does not depend on
    the choice of representatives.
    """
    g = modulus.m
    for x in xs:
        if isinstance(x, Residue):
            if x.modulus != modulus:
                raise ValueError(
                    f"mixed moduli: expected {modulus}, got {x.modulus}"
                )
            g = math.gcd(g, x.value)
        else:
            g = math.gcd(g, modulus.reduce(x))
    return g
