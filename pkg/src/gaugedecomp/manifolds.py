"""Connected sums of sphere bundles over spheres.

A manifold here is a connected sum of total spaces of S^q-bundles over
S^n admitting cross sections, each summand given by one integer twist.
The module computes the attaching-map data of the top cell, the matrix of
suspended twist images, the echelon rank that controls the suspension
splitting, and a descriptor for the cofibre space that survives as an
opaque mapping-space factor downstream.

Built-in table data covers (n, q) = (4, 3), where the twist image in
pi_6(S^3) = Z/12 is the twist reduced mod 12.  Other (n, q) work exactly
when a user table declares the corresponding generator images.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .abelian import GroupElement
from .matrices import MixedMatrix, echelon_rank, row_echelon_mixed
from .residues import Modulus
from .tables import HomotopyTable, MissingTableError, _require_table


@dataclass(frozen=True)
class ConnectedSumSpec:
    """Connected sum of r sphere-bundle summands with integer twists xi."""

    n: int
    q: int
    xi: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2 or self.q < 2:
            raise ValueError("sphere dimensions must be >= 2")
        object.__setattr__(self, "xi", tuple(int(v) for v in self.xi))
        if len(self.xi) < 1:
            raise ValueError("a connected sum needs at least one summand")

    @property
    def r(self) -> int:
        return len(self.xi)

    def to_dict(self) -> dict:
        return {"n": self.n, "q": self.q, "xi": list(self.xi)}

    @classmethod
    def from_dict(cls, data: dict) -> "ConnectedSumSpec":
        return cls(int(data["n"]), int(data["q"]), tuple(data["xi"]))

    @classmethod
    def from_json(cls, text: str) -> "ConnectedSumSpec":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class AttachingTerm:
    """One summand's contribution: twist image plus a Whitehead product.

    ``twist`` is the image of the summand's twist in pi_{n+q-1}(S^q), or
    None when the tables carry no image data for this (n, q).  The
    Whitehead product [i_n, i_q] is kept as an opaque marker; nothing
    downstream needs more than the fact that it dies under suspension.
    """

    twist: GroupElement | None
    whitehead: str

    @property
    def resolved(self) -> bool:
        return self.twist is not None

    def __str__(self):
        head = str(self.twist) if self.resolved else "J(xi) [unresolved]"
        return f"{head} + {self.whitehead}"


@dataclass(frozen=True)
class AttachingMap:
    terms: tuple[AttachingTerm, ...]

    @property
    def resolved(self) -> bool:
        return all(t.resolved for t in self.terms)

    def __str__(self):
        return " + ".join(f"({t})" for t in self.terms)


def attaching_map(
    spec: ConnectedSumSpec, table: HomotopyTable | None = None
) -> AttachingMap:
    """Top-cell attaching data, one term per summand.

    For (4, 3) the built-in tables give twist images xi mod 12 in Z/12.
    Missing image data flags the terms unresolved instead of raising.
    """
    table = _require_table(table)
    marker = f"[i_{spec.n}, i_{spec.q}]"
    image = table.attaching_image(spec.n, spec.q)
    if image is None:
        terms = tuple(AttachingTerm(None, marker) for _ in spec.xi)
    else:
        terms = tuple(
            AttachingTerm(
                GroupElement(image.target, tuple(v * c for c in image.coeffs)),
                marker,
            )
            for v in spec.xi
        )
    return AttachingMap(terms)


def _image_matrix(spec: ConnectedSumSpec, image) -> MixedMatrix:
    target = image.target
    moduli = tuple(Modulus(0) for _ in range(target.free_rank)) + tuple(
        Modulus(s) for s in target.torsion
    )
    rows = [[v * c for c in image.coeffs] for v in spec.xi]
    return MixedMatrix.from_rows(moduli, rows)


def twisting_matrix(
    spec: ConnectedSumSpec, table: HomotopyTable | None = None
) -> MixedMatrix:
    """Matrix whose rows are the suspended twist images in pi_{n+q}(S^{q+1}).

    One row per summand, one column per generator of the receiving group.
    Raises MissingTableError naming the needed key when no image data is
    declared for this (n, q).
    """
    table = _require_table(table)
    image = table.suspended_image(spec.n, spec.q)
    if image is None:
        raise MissingTableError(
            f"pi_{spec.n + spec.q}(S^{spec.q + 1}) suspended twist image "
            f"for (n, q)=({spec.n}, {spec.q})"
        )
    return _image_matrix(spec, image)


def suspension_rank(
    spec: ConnectedSumSpec, table: HomotopyTable | None = None
) -> int:
    """min(r, echelon rank of the suspended twist matrix)."""
    if all(v == 0 for v in spec.xi):
        # A zero twist has zero image in any receiving group, so the rank
        # is 0 without consulting the tables.
        return 0
    nf = twisting_matrix(spec, table)
    _, reduced = row_echelon_mixed(nf)
    return min(spec.r, echelon_rank(reduced))


@dataclass(frozen=True)
class CofibreDescriptor:
    """The cofibre of a map from S^{n+q-1} into a wedge of q-spheres.

    ``sphere_count`` is how many wedge summands the map hits, ``attaching``
    the echelon-normalized images of the map's components (one group
    element per hit sphere), and ``cell_dim`` the dimension of the attached
    cell.  With sphere_count == 0 the wedge is empty and the space is just
    S^{cell_dim}.  The descriptor is consumed opaquely downstream, as a
    pointed mapping-space factor.
    """

    sphere_count: int
    wedge_dim: int
    cell_dim: int
    attaching: tuple[GroupElement, ...]
    resolved: bool

    @property
    def is_sphere(self) -> bool:
        return self.sphere_count == 0

    def label(self, suspended: bool = False) -> str:
        shift = 1 if suspended else 0
        if self.is_sphere:
            return f"S^{self.cell_dim + shift}"
        return "Sigma Y_F" if suspended else "Y_F"

    def __str__(self):
        return self.label()


def cofibre_space(
    spec: ConnectedSumSpec, table: HomotopyTable | None = None
) -> CofibreDescriptor:
    """Descriptor of the cofibre absorbing the twisted part of the sum.

    The attaching components are read off the echelon form of the
    unsuspended twist-image matrix; for (4, 3) with gcd(12, xi) = 1 this
    is a single unit of Z/12.
    """
    table = _require_table(table)
    tbar = suspension_rank(spec, table)
    cell_dim = spec.n + spec.q
    if tbar == 0:
        # Empty wedge: the cofibre is the sphere S^{n+q} outright.
        return CofibreDescriptor(0, spec.q, cell_dim, (), True)
    image = table.attaching_image(spec.n, spec.q)
    if image is None:
        return CofibreDescriptor(tbar, spec.q, cell_dim, (), False)
    _, reduced = row_echelon_mixed(_image_matrix(spec, image))
    attaching = tuple(
        GroupElement(image.target, reduced.row(i)) for i in range(tbar)
    )
    return CofibreDescriptor(tbar, spec.q, cell_dim, attaching, True)


@dataclass(frozen=True)
class WedgeSplitting:
    """Wedge of spheres plus a suspended cofibre, e.g. the suspension of M."""

    spheres: tuple[tuple[int, int], ...]  # (dimension, count), descending dims
    cofibre: CofibreDescriptor

    def __str__(self):
        parts = []
        for dim, count in self.spheres:
            parts.extend([f"S^{dim}"] * count)
        parts.append(self.cofibre.label(suspended=True))
        return " v ".join(parts)

    def to_dict(self) -> dict:
        return {
            "spheres": [{"dim": d, "count": c} for d, c in self.spheres],
            "cofibre": {
                "sphere_count": self.cofibre.sphere_count,
                "wedge_dim": self.cofibre.wedge_dim,
                "cell_dim": self.cofibre.cell_dim,
                "resolved": self.cofibre.resolved,
                "label": self.cofibre.label(suspended=True),
            },
        }


def suspension_splitting(
    spec: ConnectedSumSpec, table: HomotopyTable | None = None
) -> WedgeSplitting:
    """Suspension of the connected sum as a wedge.

    r copies of S^{n+1}, r - rank copies of S^{q+1}, and the suspended
    cofibre.
    """
    tbar = suspension_rank(spec, table)
    counts: dict[int, int] = {spec.n + 1: spec.r}
    if spec.r - tbar > 0:
        counts[spec.q + 1] = counts.get(spec.q + 1, 0) + (spec.r - tbar)
    spheres = tuple(sorted(counts.items(), key=lambda t: -t[0]))
    return WedgeSplitting(spheres, cofibre_space(spec, table))
