"""Exact dense integer matrices and unimodular reductions.

Provides row echelon forms over columns that mix Z with residue rings
Z/m, the gcd-orbit reduction of residue vectors with an invertibility
certificate, and the induced action of integer matrices on tuples of
abelian-group elements.  Everything is exact; there is no floating point
anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .residues import INTEGERS, Modulus, Residue, bezout, gcd_mod


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major integer matrix of arbitrary-precision entries."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(int(v) for v in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        nrows = len(rows)
        if nrows == 0:
            raise ValueError("matrix needs at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, tuple(v for row in rows for v in row))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.entry(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector, over Z."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum(self.entry(i, k) * vector[k] for k in range(self.cols))
            for i in range(self.rows)
        )

    def det(self) -> int:
        """Exact determinant via Bareiss fraction-free elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        n = self.rows
        a = self.to_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    @property
    def is_unimodular(self) -> bool:
        return self.rows == self.cols and self.det() in (1, -1)


def block_diag(d1: IntMatrix, d2: IntMatrix) -> IntMatrix:
    """Block-diagonal assembly of two square matrices."""
    if d1.rows != d1.cols or d2.rows != d2.cols:
        raise ValueError("block_diag needs square blocks")
    n = d1.rows + d2.rows
    rows = []
    for i in range(d1.rows):
        rows.append(list(d1.row(i)) + [0] * d2.cols)
    for i in range(d2.rows):
        rows.append([0] * d1.cols + list(d2.row(i)))
    return IntMatrix.from_rows(rows)


def unimodular_inverse(a: IntMatrix) -> IntMatrix:
    """Integer inverse of a matrix with determinant +-1, via the adjugate."""
    d = a.det()
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det {d})")
    n = a.rows
    if n == 1:
        return IntMatrix(1, 1, (d,))

    def minor_det(skip_i, skip_j):
        rows = [
            [a.entry(i, j) for j in range(n) if j != skip_j]
            for i in range(n)
            if i != skip_i
        ]
        return IntMatrix.from_rows(rows).det()

    # inverse = adjugate / det, and det is a unit.
    inv = [
        [((-1) ** (i + j)) * minor_det(j, i) * d for j in range(n)]
        for i in range(n)
    ]
    return IntMatrix.from_rows(inv)


def unimodular_generators(r: int) -> tuple[IntMatrix, IntMatrix]:
    """The standard two-element generating set of GL_r over Z or Z/m, r >= 2.

    Returns (shear, signed_cycle): the shear is the identity plus a single
    1 in position (2, 1); the signed cycle is (-1)**(r-1) times the cyclic
    permutation matrix with a 1 in the top-right corner.
    """
    if r < 2:
        raise ValueError("generators are defined for r >= 2")
    shear = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    shear[1][0] = 1
    sign = (-1) ** (r - 1)
    cyc = [[0] * r for _ in range(r)]
    cyc[0][r - 1] = sign
    for i in range(1, r):
        cyc[i][i - 1] = sign
    return IntMatrix.from_rows(shear), IntMatrix.from_rows(cyc)


def matrix_action(a: IntMatrix, elements: Sequence) -> tuple:
    """Left action of an integer matrix on a tuple of group elements.

    ``elements`` must be addable and int-scalable values in one common
    group (GroupElement works); entry (i, j) of the matrix multiplies the
    j-th element in the i-th output slot.
    """
    if a.rows != a.cols:
        raise ValueError("action needs a square matrix")
    if a.rows != len(elements):
        raise ValueError(
            f"matrix size {a.rows} does not match element count {len(elements)}"
        )
    groups = {getattr(x, "group", None) for x in elements}
    if len(groups) > 1:
        raise ValueError("elements do not share a common group")
    out = []
    for i in range(a.rows):
        acc = 0 * elements[0]
        for j in range(a.cols):
            acc = acc + a.entry(i, j) * elements[j]
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class MixedMatrix:
    """Matrix whose columns carry individual moduli (0 meaning a Z column).

    Entries are stored as canonical integer representatives per column.
    """

    rows: int
    column_moduli: tuple[Modulus, ...]
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1:
            raise ValueError("matrix needs at least one row")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        canon = tuple(
            self.column_moduli[k % self.cols].reduce(v)
            for k, v in enumerate(self.entries)
        )
        object.__setattr__(self, "entries", canon)

    @property
    def cols(self) -> int:
        return len(self.column_moduli)

    @classmethod
    def from_rows(
        cls, column_moduli: Sequence[Modulus], rows: Sequence[Sequence[int]]
    ) -> "MixedMatrix":
        moduli = tuple(column_moduli)
        nrows = len(rows)
        if any(len(r) != len(moduli) for r in rows):
            raise ValueError("row length does not match the moduli list")
        return cls(nrows, moduli, tuple(v for row in rows for v in row))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def residue(self, i: int, j: int) -> Residue:
        return Residue(self.column_moduli[j], self.entry(i, j))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]


@dataclass(frozen=True)
class OrbitCertificate:
    """Witness that a unimodular transform carries a vector to (d, 0, ..., 0).

    ``transform`` has determinant +-1 and transform @ input is congruent,
    coordinate-wise mod m, to ``canonical`` = (d, 0, ..., 0) where d is the
    gcd of the input representatives together with m.
    """

    modulus: Modulus
    transform: IntMatrix
    canonical: tuple[Residue, ...]

    def __post_init__(self):
        if self.transform.det() not in (1, -1):
            raise ValueError("certificate transform is not unimodular")
        if any(x.value != 0 for x in self.canonical[1:]):
            raise ValueError("canonical form must vanish past the first slot")
        head = self.canonical[0].value
        m = self.modulus.m
        if m == 0:
            if head < 0:
                raise ValueError("canonical head must be non-negative over Z")
        elif head != 0 and m % head != 0:
            raise ValueError("canonical head must divide the modulus")

    @property
    def divisor(self) -> int:
        """The orbit invariant: gcd of the input together with the modulus."""
        return gcd_mod(self.modulus, self.canonical)

    def verify(self, x: Sequence[Residue | int]) -> bool:
        """Check transform @ x == canonical coordinate-wise (mod m)."""
        values = [v.value if isinstance(v, Residue) else v for v in x]
        image = self.transform.apply(values)
        return all(
            self.modulus.reduce(image[i]) == self.canonical[i].value
            for i in range(len(values))
        )


class _Reducer:
    """Row-operation workspace shared by orbit reduction and echelon forms.

    Holds the working matrix (entries canonical per column modulus) and the
    accumulated integer transform; every operation is elementary, so the
    transform always has determinant +-1.
    """

    def __init__(self, rows: Sequence[Sequence[int]], moduli: Sequence[Modulus]):
        self.moduli = tuple(moduli)
        self.mat = [
            [self.moduli[j].reduce(v) for j, v in enumerate(row)] for row in rows
        ]
        n = len(self.mat)
        self.transform = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def add(self, dst: int, src: int, c: int) -> None:
        if c == 0 or dst == src:
            return
        row_d, row_s = self.mat[dst], self.mat[src]
        for j, mod in enumerate(self.moduli):
            row_d[j] = mod.reduce(row_d[j] + c * row_s[j])
        t_d, t_s = self.transform[dst], self.transform[src]
        for j in range(len(t_d)):
            t_d[j] += c * t_s[j]

    def swap(self, i: int, j: int) -> None:
        if i == j:
            return
        self.mat[i], self.mat[j] = self.mat[j], self.mat[i]
        self.transform[i], self.transform[j] = self.transform[j], self.transform[i]

    def negate(self, i: int) -> None:
        self.mat[i] = [
            mod.reduce(-v) for mod, v in zip(self.moduli, self.mat[i])
        ]
        self.transform[i] = [-v for v in self.transform[i]]


def _place_pivot(red: _Reducer, col: int, top: int, bottom: int) -> bool:
    """Reduce rows top..bottom-1 in one column to (d, 0, ..., 0) at ``top``.

    For segments of at least two rows this realizes d = gcd of the segment
    together with the column modulus, folding the modulus in with a Bezout
    row addition when needed.  A single-row segment only admits scaling by
    -1, so it is just sign-normalized deterministically.
    Returns True iff a nonzero pivot was placed.
    """
    mod = red.moduli[col]
    m = mod.m
    if m == 0:
        for i in range(top, bottom):
            if red.mat[i][col] < 0:
                red.negate(i)

    live = [i for i in range(top, bottom) if red.mat[i][col] != 0]
    if not live:
        return False

    if bottom - top == 1:
        x = red.mat[top][col]
        if m and (m - x) < x:
            red.negate(top)
        return True

    # Euclid across rows: subtract quotient multiples of the smallest
    # entry until at most one coordinate survives.
    while len(live) >= 2:
        i = min(live, key=lambda k: (red.mat[k][col], k))
        x_i = red.mat[i][col]
        for j in live:
            if j != i:
                red.add(j, i, -(red.mat[j][col] // x_i))
        live = [k for k in range(top, bottom) if red.mat[k][col] != 0]

    i = live[0]
    x = red.mat[i][col]
    if m:
        d = math.gcd(x, m)
        if d < x:
            # One surviving coordinate whose value is not yet the gcd with
            # the modulus: park it in row top+1, fold the modulus into row
            # top by a Bezout addition, then clear row top+1.
            if i != top + 1:
                red.swap(i, top + 1)
            _, a, _ = bezout(x, m)
            red.add(top, top + 1, a)
            red.add(top + 1, top, -(x // d))
            return True
    if i != top:
        red.swap(i, top)
    return True


def _echelon(
    moduli: Sequence[Modulus], rows: Sequence[Sequence[int]]
) -> tuple[list[list[int]], list[list[int]]]:
    red = _Reducer(rows, moduli)
    nrows = len(red.mat)
    top = 0
    pivots = []
    for col in range(len(red.moduli)):
        if top == nrows:
            break
        if _place_pivot(red, col, top, nrows):
            pivots.append((top, col))
            top += 1
    # Hermite-style pass: reduce entries above each pivot into [0, pivot).
    for p, col in pivots:
        d = red.mat[p][col]
        for i in range(p):
            q = red.mat[i][col] // d
            red.add(i, p, -q)
    return red.transform, red.mat


def orbit_reduce(modulus: Modulus, x: Sequence[Residue | int]) -> OrbitCertificate:
    """Carry a residue vector to its orbit canonical form (d, 0, ..., 0).

    d is the gcd of the representatives together with the modulus, and the
    returned certificate's unimodular transform realizes the reduction by
    elementary row operations: repeated signed subtractions while two or
    more coordinates are nonzero, then one Bezout row addition to fold the
    modulus into the surviving coordinate.
    """
    r = len(x)
    if r < 2:
        raise ValueError("orbit reduction needs a vector of length >= 2")
    values = []
    for v in x:
        if isinstance(v, Residue):
            if v.modulus != modulus:
                raise ValueError(f"mixed moduli: expected {modulus}, got {v.modulus}")
            values.append(v.value)
        else:
            values.append(v)
    red = _Reducer([[v] for v in values], (modulus,))
    _place_pivot(red, 0, 0, r)
    transform = IntMatrix.from_rows(red.transform)
    canonical = tuple(Residue(modulus, red.mat[i][0]) for i in range(r))
    return OrbitCertificate(modulus, transform, canonical)


def same_orbit(
    modulus: Modulus, x: Sequence[Residue | int], y: Sequence[Residue | int]
) -> bool:
    """Whether two residue vectors lie in one orbit of the unimodular action.

    The complete invariant is the gcd of the coordinates together with the
    modulus, so this is a pure gcd comparison.
    """
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise ValueError("orbits are defined for vectors of length >= 2")
    return gcd_mod(modulus, x) == gcd_mod(modulus, y)


def row_echelon_int(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Unimodular row reduction of an integer matrix to echelon form.

    Returns (D, B) with det(D) in {+1, -1}, D @ a == B, pivots positive and
    entries above each pivot reduced into [0, pivot).
    """
    moduli = (INTEGERS,) * a.cols
    transform, mat = _echelon(moduli, a.to_lists())
    return IntMatrix.from_rows(transform), IntMatrix.from_rows(mat)


def row_echelon_mixed(a: MixedMatrix) -> tuple[IntMatrix, MixedMatrix]:
    """Unimodular row reduction of a mixed-column matrix to echelon form.

    Returns (D, B) with det(D) in {+1, -1} and D @ a congruent to B in each
    column's residue ring.  Pivots of multi-row segments equal the gcd of
    the remaining column segment together with the column modulus.
    """
    if a.cols == 0:
        return IntMatrix.identity(a.rows), a
    transform, mat = _echelon(a.column_moduli, a.to_lists())
    return IntMatrix.from_rows(transform), MixedMatrix.from_rows(a.column_moduli, mat)


def _leading_index(row: Sequence[int]) -> int | None:
    for j, v in enumerate(row):
        if v != 0:
            return j
    return None


def is_echelon(b: IntMatrix | MixedMatrix) -> bool:
    """Decide the two-clause echelon predicate.

    Leading entries of nonzero rows sit strictly to the right of the
    leading entries of the rows above them, and zero rows are at the
    bottom.
    """
    leads = [_leading_index(b.row(i)) for i in range(b.rows)]
    seen_zero = False
    prev = -1
    for lead in leads:
        if lead is None:
            seen_zero = True
            continue
        if seen_zero:
            return False
        if lead <= prev:
            return False
        prev = lead
    return True


def echelon_rank(b: IntMatrix | MixedMatrix) -> int:
    """Number of nonzero rows of a matrix already in echelon form."""
    if not is_echelon(b):
        raise ValueError("matrix is not in echelon form")
    return sum(
        1 for i in range(b.rows) if _leading_index(b.row(i)) is not None
    )


def smith_invariants(a: IntMatrix) -> tuple[int, ...]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix.

    Classic alternating row/column reduction; only the invariants are
    tracked, not the transforms.
    """
    mat = a.to_lists()
    nrows, ncols = a.rows, a.cols
    invariants = []
    k = 0
    while k < min(nrows, ncols):
        pivot = None
        best = None
        for i in range(k, nrows):
            for j in range(k, ncols):
                v = abs(mat[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        mat[k], mat[pi] = mat[pi], mat[k]
        for row in mat:
            row[k], row[pj] = row[pj], row[k]
        while True:
            for i in range(k + 1, nrows):
                q = mat[i][k] // mat[k][k]
                if q:
                    for j in range(k, ncols):
                        mat[i][j] -= q * mat[k][j]
            for j in range(k + 1, ncols):
                q = mat[k][j] // mat[k][k]
                if q:
                    for i in range(k, nrows):
                        mat[i][j] -= q * mat[i][k]
            col_clear = all(mat[i][k] == 0 for i in range(k + 1, nrows))
            row_clear = all(mat[k][j] == 0 for j in range(k + 1, ncols))
            if col_clear and row_clear:
                d = abs(mat[k][k])
                culprit = None
                for i in range(k + 1, nrows):
                    for j in range(k + 1, ncols):
                        if mat[i][j] % d != 0:
                            culprit = i
                            break
                    if culprit is not None:
                        break
                if culprit is None:
                    break
                for j in range(k, ncols):
                    mat[k][j] += mat[culprit][j]
            else:
                # Reduction left a remainder in the cross; pull the new
                # smallest entry back into the pivot slot and repeat.
                best = None
                pivot = None
                for i in range(k, nrows):
                    for j in range(k, ncols):
                        v = abs(mat[i][j])
                        if v and (best is None or v < best):
                            best, pivot = v, (i, j)
                pi, pj = pivot
                mat[k], mat[pi] = mat[pi], mat[k]
                for row in mat:
                    row[k], row[pj] = row[pj], row[k]
        invariants.append(abs(mat[k][k]))
        k += 1
    return tuple(invariants)
