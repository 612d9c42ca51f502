"""Symbolic homotopy-type decompositions of gauge groups.

Expressions are canonical products of a small factor vocabulary: a gauge
group over a single sphere, iterated loop spaces, a pointed mapping space
on the cofibre descriptor, a power-map fibre, and an opaque unknown term.
Structural equality of canonicalized expressions is the notion of
"same decomposition" used throughout.

Equivalence verdicts never claim more than is proved: the only branch
with a complete iff criterion is SU(2) over seven-dimensional sums with
coprime twists, where gauge groups are equivalent exactly when the K-gcds
with 12 agree.  Elsewhere equal levels give Equivalent (the decomposition
depends on K only through its level) and unequal levels give Unknown.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .abelian import AbelianGroup, direct_sum
from .classify import DIM7_PI6_COPRIME, classify_conditions
from .manifolds import (
    CofibreDescriptor,
    ConnectedSumSpec,
    cofibre_space,
    suspension_rank,
)
from .tables import (
    SU,
    UNKNOWN,
    HomotopyTable,
    LieGroup,
    SpaceId,
    UnknownValue,
    _require_table,
    canonical_space,
)


@dataclass(frozen=True)
class GaugeLevel:
    """Level of a gauge group over a sphere: gcd of the connecting-map
    order with the classifying tuple.

    With a known order the level is stored fully reduced (it is a divisor
    of the order); with the order unknown only the gcd of the classifying
    tuple is kept and the level stays symbolic.
    """

    order: int | None
    k_gcd: int

    @classmethod
    def make(cls, order: int | UnknownValue | None, ks: Sequence[int]) -> "GaugeLevel":
        g = math.gcd(*ks) if ks else 0
        if order is UNKNOWN or order is None:
            return cls(None, g)
        return cls(order, math.gcd(order, g))

    @property
    def known(self) -> bool:
        return self.order is not None

    @property
    def value(self) -> int | UnknownValue:
        return self.k_gcd if self.known else UNKNOWN

    def __str__(self):
        return str(self.k_gcd) if self.known else f"gcd(o(d_1), {self.k_gcd})"


@dataclass(frozen=True)
class SphereGauge:
    """Gauge group of the level-l bundle over a single sphere."""

    group: SpaceId
    base_dim: int
    level: GaugeLevel

    def sort_key(self):
        return (0, self.base_dim, str(self.group), str(self.level))

    def __str__(self):
        return f"G^{self.level}(S^{self.base_dim})"


@dataclass(frozen=True)
class PowerFibre:
    """Homotopy fibre of a k-th power composite; opaque beyond its k."""

    exponent: int
    map_label: str = "f"

    def sort_key(self):
        return (1, self.exponent, self.map_label)

    def __str__(self):
        return f"F^{self.exponent}{self.map_label}"


@dataclass(frozen=True)
class LoopSpace:
    """Iterated loop space Omega^degree of a space."""

    space: SpaceId | str
    degree: int

    def sort_key(self):
        return (2, -self.degree, str(self.space))

    def __str__(self):
        prefix = "Omega" if self.degree == 1 else f"Omega^{self.degree}"
        return f"{prefix} {self.space}"


@dataclass(frozen=True)
class MapStar:
    """Pointed mapping space from a cofibre descriptor into a group."""

    cofibre: CofibreDescriptor
    group: SpaceId

    def sort_key(self):
        return (3, str(self.group), self.cofibre.cell_dim, self.cofibre.sphere_count)

    def __str__(self):
        return f"Map*({self.cofibre.label()}, {self.group})"


@dataclass(frozen=True)
class UnknownFactor:
    label: str

    def sort_key(self):
        return (4, self.label)

    def __str__(self):
        return self.label


Factor = SphereGauge | PowerFibre | LoopSpace | MapStar | UnknownFactor


@dataclass(frozen=True)
class ProductExpr:
    """Canonical product of factors with multiplicities >= 1."""

    factors: tuple[tuple[Factor, int], ...]

    @classmethod
    def build(cls, pairs: Sequence[tuple[Factor, int]]) -> "ProductExpr":
        merged: dict[Factor, int] = {}
        for factor, mult in pairs:
            if mult > 0:
                merged[factor] = merged.get(factor, 0) + mult
        ordered = tuple(
            sorted(merged.items(), key=lambda fm: fm[0].sort_key())
        )
        return cls(ordered)

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for factor, mult in self.factors:
            parts.append(str(factor) if mult == 1 else f"{factor}^{mult}")
        return " x ".join(parts)

    def to_dict(self) -> dict:
        out = []
        for factor, mult in self.factors:
            entry: dict = {"factor": str(factor), "multiplicity": mult}
            if isinstance(factor, SphereGauge):
                entry["kind"] = "sphere_gauge"
                entry["base_dim"] = factor.base_dim
                entry["level"] = (
                    factor.level.k_gcd if factor.level.known else str(factor.level)
                )
            elif isinstance(factor, LoopSpace):
                entry["kind"] = "loop_space"
                entry["degree"] = factor.degree
                entry["space"] = str(factor.space)
            elif isinstance(factor, MapStar):
                entry["kind"] = "pointed_maps"
                entry["cofibre_spheres"] = factor.cofibre.sphere_count
                entry["cofibre_resolved"] = factor.cofibre.resolved
            elif isinstance(factor, PowerFibre):
                entry["kind"] = "power_fibre"
                entry["exponent"] = factor.exponent
            else:
                entry["kind"] = "unknown"
            out.append(entry)
        return {"factors": out, "pretty": str(self)}


def level(
    group: SpaceId, n: int, ks: Sequence[int], table: HomotopyTable | None = None
) -> int | UnknownValue:
    """gcd of the connecting-map order over S^n with the classifying tuple.

    Unknown when the order is not in the tables.
    """
    if len(ks) < 1:
        raise ValueError("need at least one classifying integer")
    order = _require_table(table).connecting_order(group, n)
    return GaugeLevel.make(order, tuple(ks)).value


def _require_decomposable(group, spec, table):
    case = classify_conditions(group, spec, table)
    if not case.is_bijective:
        raise ValueError(f"no decomposition available: {case.reason}")
    return case


def wedge_gauge_decomposition(
    group: SpaceId,
    n: int,
    r: int,
    ks: Sequence[int],
    table: HomotopyTable | None = None,
) -> ProductExpr:
    """Gauge group over a wedge of r n-spheres.

    One sphere gauge factor at the level of the tuple, and r - 1 copies of
    Omega^n G.
    """
    if not isinstance(group, LieGroup):
        raise ValueError(f"structure group must be a Lie group, got {group}")
    if r < 1:
        raise ValueError("need r >= 1 spheres")
    if len(ks) != r:
        raise ValueError(f"expected {r} classifying integers, got {len(ks)}")
    order = _require_table(table).connecting_order(group, n)
    gauge = SphereGauge(group, n, GaugeLevel.make(order, tuple(ks)))
    return ProductExpr.build([(gauge, 1), (LoopSpace(group, n), r - 1)])


def gauge_decomposition(
    group: SpaceId,
    spec: ConnectedSumSpec,
    ks: Sequence[int],
    table: HomotopyTable | None = None,
) -> ProductExpr:
    """Unpointed gauge group of the bundle classified by ``ks``.

    A sphere gauge factor at level gcd(order, ks), r - 1 copies of
    Omega^n G, r - rank copies of Omega^q G, and the pointed mapping space
    on the cofibre descriptor.  A one-summand manifold degenerates to the
    single-sphere case.
    """
    ks = tuple(ks)
    if len(ks) != spec.r:
        raise ValueError(
            f"expected {spec.r} classifying integers, got {len(ks)}"
        )
    if spec.r == 1:
        return wedge_gauge_decomposition(group, spec.n, 1, ks, table)
    _require_decomposable(group, spec, table)
    table = _require_table(table)
    tbar = suspension_rank(spec, table)
    order = table.connecting_order(group, spec.n)
    return ProductExpr.build(
        [
            (SphereGauge(group, spec.n, GaugeLevel.make(order, ks)), 1),
            (LoopSpace(group, spec.n), spec.r - 1),
            (LoopSpace(group, spec.q), spec.r - tbar),
            (MapStar(cofibre_space(spec, table), group), 1),
        ]
    )


def pointed_gauge_decomposition(
    group: SpaceId,
    spec: ConnectedSumSpec,
    ks: Sequence[int] | None = None,
    table: HomotopyTable | None = None,
) -> ProductExpr:
    """Pointed gauge group; independent of the classifying tuple.

    r copies of Omega^n G, r - rank copies of Omega^q G, and the pointed
    mapping space on the cofibre descriptor.
    """
    if ks is not None and len(ks) != spec.r:
        raise ValueError(f"expected {spec.r} classifying integers, got {len(ks)}")
    _require_decomposable(group, spec, table)
    table = _require_table(table)
    tbar = suspension_rank(spec, table)
    return ProductExpr.build(
        [
            (LoopSpace(group, spec.n), spec.r),
            (LoopSpace(group, spec.q), spec.r - tbar),
            (MapStar(cofibre_space(spec, table), group), 1),
        ]
    )


def power_fibre_decomposition(
    order: int, r: int, ks: Sequence[int], space_label: str = "Y"
) -> ProductExpr:
    """Fibre of a sum of power-map composites through one map of given order.

    The fibre of sum(ks[i] * f_i) splits as the fibre of the k-th power
    composite, k = gcd(order, ks), times r - 1 copies of Omega Y.
    """
    if order < 0:
        raise ValueError("order must be non-negative (0 = infinite)")
    ks = tuple(ks)
    if len(ks) != r:
        raise ValueError(f"expected {r} coefficients, got {len(ks)}")
    k = math.gcd(order, *ks)
    return ProductExpr.build(
        [(PowerFibre(k), 1), (LoopSpace(space_label, 1), r - 1)]
    )


@dataclass(frozen=True)
class EquivalenceVerdict:
    verdict: str  # "Equivalent" | "NotEquivalent" | "Unknown"
    reason: str


def gauge_equivalent(
    group: SpaceId,
    spec: ConnectedSumSpec,
    ks: Sequence[int],
    ks2: Sequence[int],
    table: HomotopyTable | None = None,
) -> EquivalenceVerdict:
    """Decide whether two classifying tuples give equivalent gauge groups.

    NotEquivalent is only ever emitted on the SU(2) branch over
    (n, q) = (4, 3), where the criterion is an iff; other branches return
    Equivalent on equal levels and Unknown otherwise.
    """
    ks, ks2 = tuple(ks), tuple(ks2)
    if len(ks) != spec.r or len(ks2) != spec.r:
        raise ValueError(f"classifying tuples must have length {spec.r}")
    _require_decomposable(group, spec, table)
    table = _require_table(table)
    order = table.connecting_order(group, spec.n)
    su2_branch = (
        (spec.n, spec.q) == (4, 3)
        and canonical_space(group) == SU(2)
        and order is not UNKNOWN
    )
    if su2_branch:
        g1 = math.gcd(order, *ks)
        g2 = math.gcd(order, *ks2)
        if g1 == g2:
            return EquivalenceVerdict(
                "Equivalent",
                f"gcd({order}, K) = gcd({order}, K') = {g1}; the connecting map "
                f"over S^4 for SU(2) has order {order} (Kono 1991) and the "
                f"decomposition depends on K only through this gcd",
            )
        return EquivalenceVerdict(
            "NotEquivalent",
            f"gcd({order}, K) = {g1} != {g2} = gcd({order}, K'); the pi_2 of the "
            f"sphere-gauge factor has order equal to that gcd, so the gauge "
            f"groups have non-isomorphic pi_2",
        )
    if order is not UNKNOWN:
        l1 = math.gcd(order, *ks)
        l2 = math.gcd(order, *ks2)
        if l1 == l2:
            return EquivalenceVerdict(
                "Equivalent",
                f"l(K) = l(K') = {l1}; the decomposition depends on K only "
                f"through l(K)",
            )
        return EquivalenceVerdict(
            "Unknown",
            f"l(K) = {l1} and l(K') = {l2} differ; no inequivalence criterion "
            f"is available for {group} over S^{spec.n}",
        )
    g1 = math.gcd(*ks)
    g2 = math.gcd(*ks2)
    if g1 == g2:
        return EquivalenceVerdict(
            "Equivalent",
            f"gcd(K) = gcd(K') = {g1}, so the levels agree for every value of "
            f"the (unknown) connecting-map order",
        )
    return EquivalenceVerdict(
        "Unknown",
        f"the connecting-map order for {group} over S^{spec.n} is not in the "
        f"tables and gcd(K) = {g1} != {g2} = gcd(K')",
    )


@dataclass(frozen=True)
class SymbolicSum:
    """A direct sum, split into a table-resolved part and symbolic terms."""

    known: AbelianGroup
    symbolic: tuple[str, ...]

    @property
    def is_resolved(self) -> bool:
        return not self.symbolic

    def __str__(self):
        if self.is_resolved:
            return str(self.known)
        parts = [] if self.known.is_trivial else [str(self.known)]
        parts.extend(self.symbolic)
        return " (+) ".join(parts)

    def to_dict(self) -> dict:
        return {
            "known": self.known.to_dict(),
            "symbolic": list(self.symbolic),
            "pretty": str(self),
        }


def _remark_shape(xi: tuple[int, ...]) -> bool:
    """One twist congruent to 1 mod 12 and all others to 0."""
    residues = sorted(v % 12 for v in xi)
    return residues[:-1] == [0] * (len(xi) - 1) and residues[-1] == 1


def pointed_gauge_pi(
    group: SpaceId,
    spec: ConnectedSumSpec,
    j: int,
    table: HomotopyTable | None = None,
) -> SymbolicSum:
    """pi_j of the pointed gauge group, assembled from the tables.

    r copies of pi_{j+n}(G), r - rank copies of pi_{j+q}(G), plus the
    pi_j of the residual mapping space.  The residual resolves to zero in
    degree 0 when exactly one twist is a 1 mod 12 and the rest vanish
    mod 12; when the cofibre degenerates to a sphere it resolves through
    the tables; otherwise it stays symbolic.  Unknown table entries stay
    symbolic rather than defaulting.
    """
    if j < 0:
        raise ValueError("homotopy degree must be non-negative")
    _require_decomposable(group, spec, table)
    table = _require_table(table)
    tbar = suspension_rank(spec, table)
    known: list[AbelianGroup] = []
    symbolic: list[str] = []

    def gather(degree: int, mult: int):
        if mult <= 0:
            return
        got = table.lookup_pi(group, degree)
        if got is UNKNOWN:
            label = f"pi_{degree}({group})"
            symbolic.append(label if mult == 1 else f"{label}^{mult}")
        else:
            known.extend([got] * mult)

    gather(j + spec.n, spec.r)
    gather(j + spec.q, spec.r - tbar)

    if tbar == 0:
        # The cofibre is the sphere S^{n+q}, so the residual is a loop space.
        gather(j + spec.n + spec.q, 1)
    elif (spec.n, spec.q) == (4, 3) and j == 0 and _remark_shape(spec.xi):
        pass  # the residual term vanishes
    else:
        symbolic.append(f"pi_{j}(Map*(Y_F, {group}))")
    return SymbolicSum(direct_sum(known), tuple(symbolic))


def sphere_gauge_pi2_order(level_value: int) -> int:
    """|pi_2| of the level-l SU(2) gauge group over S^4 equals l itself."""
    if level_value < 1:
        raise ValueError("level must be a positive integer")
    return level_value
