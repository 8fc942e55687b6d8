"""Dense exact linear algebra over a :class:`~fdalg.field.Field`.

Matrices are small (at most a few hundred rows) so storage is a plain tuple
of row tuples. Row reduction is Gauss-Jordan with exact division; the
determinant uses fraction-free Bareiss elimination.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import lcm
from typing import Sequence

from .errors import DimensionMismatch, MixedFields, NotSquare, Singular
from .field import Field, FieldValue, RationalField

__all__ = [
    "Matrix",
    "Unique",
    "Affine",
    "Inconsistent",
    "rref",
    "rank",
    "det",
    "solve_system",
    "kernel",
    "invert_matrix",
]

Vector = tuple  # tuple of FieldValue


class Matrix:
    """Immutable dense matrix; all entries share ``field``."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence], ncols: int | None = None):
        data = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise DimensionMismatch("ragged rows")
        self.field = field
        self.nrows = len(data)
        self.ncols = ncols
        self.rows = data

    @classmethod
    def _trusted(cls, field, rows, ncols):
        m = object.__new__(cls)
        m.field = field
        m.nrows = len(rows)
        m.ncols = ncols
        m.rows = rows
        return m

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        zero, one = field.zero, field.one
        rows = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        return cls._trusted(field, rows, n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        zero = field.zero
        return cls._trusted(field, tuple((zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int | None = None) -> Matrix:
        if nrows is None:
            nrows = len(columns[0])
        rows = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        return cls(field, rows, ncols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> Matrix:
        return Matrix._trusted(self.field, tuple(zip(*self.rows)) if self.nrows else (), self.nrows)

    def _check(self, other: Matrix):
        if other.field != self.field:
            raise MixedFields(f"{self.field} and {other.field} do not combine")

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.transpose().rows
            zero = self.field.zero
            rows = tuple(
                tuple(sum((a * b for a, b in zip(row, col) if a and b), zero) for col in cols)
                for row in self.rows
            )
            return Matrix._trusted(self.field, rows, other.ncols)
        return self.apply(other)

    def apply(self, vector: Sequence[FieldValue]) -> Vector:
        """Matrix-vector product."""
        if len(vector) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.shape} matrix")
        zero = self.field.zero
        return tuple(sum((a * b for a, b in zip(row, vector) if a and b), zero) for row in self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        rows = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return Matrix._trusted(self.field, rows, self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other.scale(-1)

    def scale(self, c) -> Matrix:
        c = self.field(c)
        rows = tuple(tuple(c * a for a in row) for row in self.rows)
        return Matrix._trusted(self.field, rows, self.ncols)

    def hstack(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.nrows != other.nrows:
            raise DimensionMismatch("row counts differ")
        rows = tuple(r + s for r, s in zip(self.rows, other.rows))
        return Matrix._trusted(self.field, rows, self.ncols + other.ncols)

    def vstack(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.ncols != other.ncols:
            raise DimensionMismatch("column counts differ")
        return Matrix._trusted(self.field, self.rows + other.rows, self.ncols)

    def tolist(self) -> list[list[FieldValue]]:
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix({self.field!r}, [{body}])"


@dataclass(frozen=True)
class Unique:
    solution: object


@dataclass(frozen=True)
class Affine:
    particular: object
    kernel: list = dc_field(default_factory=list)


@dataclass(frozen=True)
class Inconsistent:
    rank: int
    augmented_rank: int


def _rref_rows(rows: list[list[FieldValue]], ncols: int, limit: int | None = None):
    """In-place Gauss-Jordan; returns pivot columns. Only the first ``limit`` columns pivot."""
    if limit is None:
        limit = ncols
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(limit):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inv()
        pivot_row = [x * inv for x in rows[r]]
        rows[r] = pivot_row
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row-echelon form, pivot columns and rank."""
    rows = [list(row) for row in m.rows]
    pivots = _rref_rows(rows, m.ncols)
    reduced = Matrix._trusted(m.field, tuple(tuple(row) for row in rows), m.ncols)
    return reduced, pivots, len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def _bareiss(rows: list[list], div) -> object:
    """Fraction-free determinant of a square list of raw ring entries.

    ``div(a, b)`` must be exact division in the underlying ring.
    """
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            row_i, row_k = rows[i], rows[k]
            for j in range(k + 1, n):
                row_i[j] = div(pk * row_i[j] - rik * row_k[j], prev)
            row_i[k] = 0
        prev = pk
    return sign * rows[n - 1][n - 1]


def det(m: Matrix):
    """Exact determinant by Bareiss elimination."""
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.nrows}x{m.ncols} matrix")
    field = m.field
    if isinstance(field, RationalField):
        # scale each row to integers, then divide the scales back out
        rows, scale = [], 1
        for row in m.rows:
            s = lcm(*(x.value.denominator for x in row)) if row else 1
            rows.append([int(x.value * s) for x in row])
            scale *= s
        return field(_bareiss(rows, lambda a, b: a // b)) / scale
    p = field.p
    rows = [[x.value for x in row] for row in m.rows]
    return field(_bareiss(rows, lambda a, b: a * pow(b, -1, p) % p))


def _check_rhs(m: Matrix, rhs: Sequence) -> tuple:
    if len(rhs) != m.nrows:
        raise DimensionMismatch(f"{m.nrows} equations but right-hand side has {len(rhs)} entries")
    return tuple(m.field(x) for x in rhs)


def solve_system(m: Matrix, rhs: Sequence) -> Unique | Affine | Inconsistent:
    """Classify and solve ``m x = rhs``.

    Free variables are set to zero in the particular solution, and the kernel
    basis has one vector per free column (that variable 1, other free ones 0).
    """
    rhs = _check_rhs(m, rhs)
    n = m.ncols
    rows = [list(row) + [b] for row, b in zip(m.rows, rhs)]
    pivots = _rref_rows(rows, n + 1)
    if pivots and pivots[-1] == n:
        return Inconsistent(rank=len(pivots) - 1, augmented_rank=len(pivots))
    zero = m.field.zero
    x = [zero] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    basis = _kernel_from_rref(rows, pivots, n, m.field)
    if not basis:
        return Unique(tuple(x))
    return Affine(tuple(x), basis)


def _kernel_from_rref(rows, pivots, n, field) -> list[Vector]:
    pivot_set = set(pivots)
    zero, one = field.zero, field.one
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [zero] * n
        v[f] = one
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def kernel(m: Matrix) -> list[Vector]:
    """Canonical basis of the right null space."""
    rows = [list(row) for row in m.rows]
    pivots = _rref_rows(rows, m.ncols)
    return _kernel_from_rref(rows, pivots, m.ncols, m.field)


def invert_matrix(m: Matrix) -> Matrix:
    if not m.is_square:
        raise NotSquare(f"cannot invert a {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    aug = m.hstack(Matrix.identity(m.field, n))
    rows = [list(row) for row in aug.rows]
    pivots = _rref_rows(rows, 2 * n, limit=n)
    if len(pivots) < n:
        raise Singular("matrix is singular")
    return Matrix._trusted(m.field, tuple(tuple(row[n:]) for row in rows), n)
