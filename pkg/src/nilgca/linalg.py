"""Dense exact linear algebra over the Gaussian rationals.

Matrices are immutable tuples of tuples; subspaces are kept in reduced
row echelon form so that equality of subspaces is syntactic equality of
their bases.  Ambient dimensions in this package never exceed a few
dozen, so everything is dense and unoptimized on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .scalars import GaussianRational, ONE, ZERO, scalar

Vector = tuple


class DimensionError(ValueError):
    """Operands have inconsistent dimensions."""


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def vector(values) -> Vector:
    return tuple(scalar(v) for v in values)


def vzero(n: int) -> Vector:
    return tuple([ZERO] * n)


def vunit(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, u: Vector) -> Vector:
    c = scalar(c)
    return tuple(c * a for a in u)


def vdot(u: Vector, v: Vector) -> GaussianRational:
    # Bilinear, no conjugation: the geometry here uses bilinear pairings.
    total = ZERO
    for a, b in zip(u, v, strict=True):
        total = total + a * b
    return total


def vconj(u: Vector) -> Vector:
    return tuple(a.conjugate() for a in u)


def vis_zero(u: Vector) -> bool:
    return all(a.is_zero() for a in u)


def vis_real(u: Vector) -> bool:
    return all(a.is_real() for a in u)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Matrix:
    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries, cols: Optional[int] = None):
        rows = tuple(tuple(scalar(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionError("ragged matrix")
            if cols is not None and cols != width:
                raise DimensionError("explicit column count disagrees with rows")
        else:
            width = 0 if cols is None else cols  # keep shape for 0-row matrices
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix([[ZERO] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def from_rows(rows: Iterable[Sequence]) -> "Matrix":
        return Matrix([list(r) for r in rows])

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("matrix shapes differ")
        return Matrix(
            [vadd(self.entries[i], other.entries[i]) for i in range(self.rows)],
            cols=self.cols,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix([[-x for x in row] for row in self.entries], cols=self.cols)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix([[c * x for x in row] for row in self.entries], cols=self.cols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError("matrix product shape mismatch")
            cols = [other.col(j) for j in range(other.cols)]
            return Matrix(
                [[vdot(row, col) for col in cols] for row in self.entries],
                cols=other.cols,
            )
        return NotImplemented

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise DimensionError("matrix-vector shape mismatch")
        return tuple(vdot(row, v) for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix([self.col(j) for j in range(self.cols)], cols=self.rows)

    def conjugate(self) -> "Matrix":
        return Matrix([vconj(row) for row in self.entries], cols=self.cols)

    def is_zero(self) -> bool:
        return all(vis_zero(row) for row in self.entries)

    def is_real(self) -> bool:
        return all(vis_real(row) for row in self.entries)

    def is_antisymmetric(self) -> bool:
        return self == -self.transpose()

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionError("hstack row mismatch")
        return Matrix(
            [self.entries[i] + other.entries[i] for i in range(self.rows)],
            cols=self.cols + other.cols,
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionError("vstack column mismatch")
        return Matrix(self.entries + other.entries, cols=self.cols)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        col_idx = list(col_idx)
        return Matrix(
            [[self.entries[i][j] for j in col_idx] for i in row_idx],
            cols=len(col_idx),
        )

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self.entries
        )

    __repr__ = __str__


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RrefResult:
    matrix: Matrix
    rank: int
    pivots: tuple


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row echelon form, with rank and pivot columns."""
    work = [list(row) for row in m.entries]
    n_rows, n_cols = m.rows, m.cols
    pivots = []
    pivot_row = 0
    for col in range(n_cols):
        found = None
        for r in range(pivot_row, n_rows):
            if work[r][col]:
                found = r
                break
        if found is None:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        piv = work[pivot_row]
        inv = piv[col].inverse()
        for c in range(col, n_cols):
            if piv[c]:
                piv[c] = inv * piv[c]
        support = [c for c in range(col, n_cols) if piv[c]]
        for r in range(n_rows):
            if r == pivot_row:
                continue
            row = work[r]
            factor = row[col]
            if factor:
                for c in support:
                    row[c] = row[c] - factor * piv[c]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == n_rows:
            break
    return RrefResult(Matrix(work, cols=n_cols), len(pivots), tuple(pivots))


def det(m: Matrix) -> GaussianRational:
    if m.rows != m.cols:
        raise DimensionError("determinant of a non-square matrix")
    work = [list(row) for row in m.entries]
    n = m.rows
    total = ONE
    for col in range(n):
        found = None
        for r in range(col, n):
            if work[r][col]:
                found = r
                break
        if found is None:
            return ZERO
        if found != col:
            work[col], work[found] = work[found], work[col]
            total = -total
        total = total * work[col][col]
        inv = work[col][col].inverse()
        for r in range(col + 1, n):
            if work[r][col]:
                factor = work[r][col] * inv
                work[r] = [work[r][c] - factor * work[col][c] for c in range(n)]
    return total


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    aug = rref(m.hstack(Matrix.identity(n)))
    if aug.pivots[:n] != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return aug.matrix.submatrix(range(n), range(n, 2 * n))


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """Row space in canonical RREF; equality is syntactic equality of bases."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, basis: Matrix):
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @staticmethod
    def from_vectors(ambient: int, vectors: Iterable[Vector]) -> "Subspace":
        rows = [vector(v) for v in vectors]
        for row in rows:
            if len(row) != ambient:
                raise DimensionError("vector length differs from ambient dimension")
        if not rows:
            return Subspace(ambient, Matrix.zeros(0, ambient))
        reduced = rref(Matrix(rows, cols=ambient))
        kept = reduced.matrix.entries[: reduced.rank]
        return Subspace(ambient, Matrix(kept, cols=ambient))

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, Matrix.zeros(0, ambient))

    @staticmethod
    def full(ambient: int) -> "Subspace":
        return Subspace(ambient, Matrix.identity(ambient))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self):
        return list(self.basis.entries)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def reduce(self, v: Vector) -> Vector:
        """Residue of v after elimination against the RREF basis."""
        if len(v) != self.ambient:
            raise DimensionError("vector length differs from ambient dimension")
        pivots = [next(j for j in range(self.ambient) if row[j]) for row in self.basis.entries]
        residue = list(v)
        for row, p in zip(self.basis.entries, pivots):
            if residue[p]:
                factor = residue[p]
                residue = [residue[j] - factor * row[j] for j in range(self.ambient)]
        return tuple(residue)

    def coordinates(self, v: Vector) -> Optional[Vector]:
        """Coefficients of v over the basis rows, or None if v is outside."""
        if self.dim == 0:
            return () if vis_zero(v) else None
        pivots = [next(j for j in range(self.ambient) if row[j]) for row in self.basis.entries]
        residue = list(v)
        coeffs = []
        for row, p in zip(self.basis.entries, pivots):
            c = residue[p]
            coeffs.append(c)
            if c:
                residue = [residue[j] - c * row[j] for j in range(self.ambient)]
        if not vis_zero(tuple(residue)):
            return None
        return tuple(coeffs)

    def contains(self, v: Vector) -> bool:
        return vis_zero(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis.entries)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace.from_vectors(
            self.ambient, list(self.basis.entries) + list(other.basis.entries)
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        # Zassenhaus: reduce [A|A; B|0]; rows with zero left block carry the
        # intersection in their right block.
        self._same_ambient(other)
        n = self.ambient
        top = self.basis.hstack(self.basis)
        bottom = other.basis.hstack(Matrix.zeros(other.basis.rows, n))
        if top.rows + bottom.rows == 0:
            return Subspace.zero(n)
        reduced = rref(top.vstack(bottom)).matrix
        out = []
        for row in reduced.entries:
            if vis_zero(row[:n]) and not vis_zero(row[n:]):
                out.append(row[n:])
        return Subspace.from_vectors(n, out)

    def conjugate(self) -> "Subspace":
        return Subspace.from_vectors(
            self.ambient, [vconj(row) for row in self.basis.entries]
        )

    def is_real(self) -> bool:
        """Closed under entrywise complex conjugation."""
        return self == self.conjugate()

    def complement(self) -> "Subspace":
        """Canonical complement spanned by the non-pivot standard vectors."""
        pivots = set()
        for row in self.basis.entries:
            pivots.add(next(j for j in range(self.ambient) if row[j]))
        return Subspace.from_vectors(
            self.ambient,
            [vunit(self.ambient, j) for j in range(self.ambient) if j not in pivots],
        )

    def _same_ambient(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise DimensionError("subspaces live in different ambient spaces")

    def __str__(self):
        return "Subspace(dim %d of %d)\n%s" % (self.dim, self.ambient, self.basis)

    __repr__ = __str__


def kernel(m: Matrix, reduced: Optional[RrefResult] = None) -> Subspace:
    """Exact null space {v : m @ v = 0} as a subspace of the column domain."""
    if reduced is None:
        reduced = rref(m)
    pivots = set(reduced.pivots)
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    pivot_list = list(reduced.pivots)
    for j in free:
        v = [ZERO] * m.cols
        v[j] = ONE
        for r, p in enumerate(pivot_list):
            v[p] = -reduced.matrix[r, j]
        basis.append(tuple(v))
    return Subspace.from_vectors(m.cols, basis)


# ---------------------------------------------------------------------------
# affine systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineSolution:
    """Solution set of A x = b: one particular solution plus ker A.

    When infeasible, `particular` is None and the rank pair is the
    replayable certificate (rank_a < rank_aug).
    """

    feasible: bool
    particular: Optional[Vector]
    kernel: Optional[Subspace]
    rank_a: int
    rank_aug: int

    def replay_certificate(self, a: Matrix, b: Vector) -> bool:
        """Re-derive the ranks from the raw system and compare."""
        fresh_a = rref(a).rank
        fresh_aug = rref(a.hstack(Matrix([[x] for x in b]))).rank
        return fresh_a == self.rank_a and fresh_aug == self.rank_aug


def solve_affine(a: Matrix, b: Vector) -> AffineSolution:
    """Exact solution set of A x = b, or a rank-certified INFEASIBLE.

    One row reduction of [A|b] suffices: the pivots landing in A-columns
    count rank(A), and when the last column carries no pivot, dropping it
    leaves the RREF of A itself (RREF is unique), from which the kernel
    is read off.
    """
    if len(b) != a.rows:
        raise DimensionError("right-hand side length differs from row count")
    aug = a.hstack(Matrix([[x] for x in b]))
    reduced = rref(aug)
    rank_aug = reduced.rank
    rank_a = sum(1 for p in reduced.pivots if p < a.cols)
    if rank_a < rank_aug:
        return AffineSolution(False, None, None, rank_a, rank_aug)
    x = [ZERO] * a.cols
    for r, p in enumerate(reduced.pivots):
        # rank_a == rank_aug, so no pivot sits in the augmented column
        x[p] = reduced.matrix[r, a.cols]
    a_rref = RrefResult(
        reduced.matrix.submatrix(range(a.rows), range(a.cols)),
        rank_a,
        reduced.pivots,
    )
    return AffineSolution(True, tuple(x), kernel(a, a_rref), rank_a, rank_aug)
