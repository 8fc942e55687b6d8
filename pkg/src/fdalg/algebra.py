"""Finite-dimensional algebras given by structure constants.

An algebra of dimension ``n`` over a field carries scalars ``B[i, j, k]`` with
``e_i * e_j = sum_k B[i, j, k] e_k``. Nothing is assumed about the constants:
the product may be neither associative nor commutative, and a unit may or may
not exist.
"""

from __future__ import annotations

import re
from collections import defaultdict
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DimensionMismatch, DuplicateTriple, IndexOutOfRange, MixedAlgebras, NoUnit
from .field import QQ, Field, FieldValue, field_from_descriptor
from .linalg import Matrix, Unique, solve_system

__all__ = [
    "Algebra",
    "AlgebraElement",
    "new_algebra",
    "multiply",
    "is_associative",
    "is_commutative",
    "find_unit",
    "left_mul_matrix",
    "right_mul_matrix",
]

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class Algebra:
    """An algebra over ``field`` with sparse structure constants.

    ``constants`` maps ``(i, j, k)`` to a nonzero :class:`FieldValue`; zero
    entries are dropped on construction. Structural properties are computed
    on first access and cached.
    """

    def __init__(self, field: Field, dim: int, constants: dict, names: Sequence[str] | None = None, name: str = ""):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {dim!r}")
        if names is None:
            names = [f"e{i}" for i in range(dim)]
        names = tuple(names)
        if len(names) != dim:
            raise DimensionMismatch(f"{len(names)} basis names for dimension {dim}")
        if len(set(names)) != dim:
            raise ValueError("basis names must be distinct")
        for nm in names:
            if not _IDENT.match(nm):
                raise ValueError(f"basis name {nm!r} is not an identifier")
        table = {}
        for (i, j, k), v in constants.items():
            for idx in (i, j, k):
                if not isinstance(idx, int) or not 0 <= idx < dim:
                    raise IndexOutOfRange(f"index {idx!r} outside [0, {dim})")
            v = field(v)
            if v:
                table[i, j, k] = v
        self.field = field
        self.dim = dim
        self.names = names
        self.name = name
        self.constants = table
        by_pair = defaultdict(list)
        for (i, j, k), v in sorted(table.items()):
            by_pair[i, j].append((k, v))
        self._by_pair = dict(by_pair)

    # -- elements -----------------------------------------------------------

    def element(self, coords: Sequence) -> AlgebraElement:
        if len(coords) != self.dim:
            raise DimensionMismatch(f"{len(coords)} coordinates for an algebra of dimension {self.dim}")
        return AlgebraElement(self, tuple(self.field(c) for c in coords))

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, (self.field.zero,) * self.dim)

    def basis(self, i: int) -> AlgebraElement:
        if not 0 <= i < self.dim:
            raise IndexOutOfRange(f"basis index {i} outside [0, {self.dim})")
        zero, one = self.field.zero, self.field.one
        return AlgebraElement(self, tuple(one if k == i else zero for k in range(self.dim)))

    def basis_elements(self) -> list[AlgebraElement]:
        return [self.basis(i) for i in range(self.dim)]

    def scalar(self, c) -> AlgebraElement:
        """``c`` times the unit."""
        return self.require_unit() * self.field(c)

    def _product_coords(self, a: Sequence[FieldValue], b: Sequence[FieldValue]) -> tuple:
        out = [self.field.zero] * self.dim
        for (i, j), terms in self._by_pair.items():
            ai = a[i]
            if not ai:
                continue
            bj = b[j]
            if not bj:
                continue
            c = ai * bj
            for k, v in terms:
                out[k] = out[k] + v * c
        return tuple(out)

    # -- structure ----------------------------------------------------------

    @cached_property
    def is_associative(self) -> bool:
        basis = self.basis_elements()
        for x in basis:
            for y in basis:
                xy = x * y
                for z in basis:
                    if xy * z != x * (y * z):
                        return False
        return True

    @cached_property
    def is_commutative(self) -> bool:
        return all(
            self._by_pair.get((i, j)) == self._by_pair.get((j, i))
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    @cached_property
    def unit(self) -> AlgebraElement | None:
        """The two-sided unit, or ``None`` when the algebra has none."""
        n, F = self.dim, self.field
        # unknowns u^i; L_u = I gives sum_i B[i,j,k] u^i = delta(k,j), R_u = I symmetric
        rows = [[F.zero] * n for _ in range(2 * n * n)]
        rhs = [F.zero] * (2 * n * n)
        for k in range(n):
            rhs[k * n + k] = F.one
            rhs[n * n + k * n + k] = F.one
        for (i, j, k), v in self.constants.items():
            rows[k * n + j][i] += v
            rows[n * n + k * n + i][j] += v
        outcome = solve_system(Matrix(F, rows, ncols=n), rhs)
        # a consistent system is always Unique: two-sided units coincide
        if isinstance(outcome, Unique):
            return AlgebraElement(self, outcome.solution)
        return None

    def require_unit(self) -> AlgebraElement:
        u = self.unit
        if u is None:
            raise NoUnit(f"algebra {self.name or '<anonymous>'} has no unit")
        return u

    def left_mul_matrix(self, a: AlgebraElement) -> Matrix:
        """Matrix of ``x -> a x`` acting on coordinate columns."""
        self._own(a)
        n, F = self.dim, self.field
        rows = [[F.zero] * n for _ in range(n)]
        for (i, j, k), v in self.constants.items():
            if a.coords[i]:
                rows[k][j] += v * a.coords[i]
        return Matrix(F, rows, ncols=n)

    def right_mul_matrix(self, a: AlgebraElement) -> Matrix:
        """Matrix of ``x -> x a`` acting on coordinate columns."""
        self._own(a)
        n, F = self.dim, self.field
        rows = [[F.zero] * n for _ in range(n)]
        for (i, j, k), v in self.constants.items():
            if a.coords[j]:
                rows[k][i] += v * a.coords[j]
        return Matrix(F, rows, ncols=n)

    def _own(self, a: AlgebraElement):
        if not isinstance(a, AlgebraElement):
            raise TypeError(f"expected an AlgebraElement, got {type(a).__name__}")
        if a.algebra is not self and a.algebra != self:
            raise MixedAlgebras("element belongs to a different algebra")

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.names == other.names
            and self.constants == other.constants
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.names, len(self.constants)))

    def __repr__(self):
        label = self.name or "algebra"
        return f"<Algebra {label!r} dim={self.dim} over {self.field}>"


class AlgebraElement:
    """Immutable coordinate vector bound to an algebra.

    ``a * b`` is the algebra product, ``c * a`` with a scalar ``c`` is scalar
    action.
    """

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: tuple):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    def _same(self, other: AlgebraElement):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise MixedAlgebras("elements of different algebras do not combine")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (FieldValue, int)) and not isinstance(other, bool):
            c = self.algebra.field(other)
            return AlgebraElement(self.algebra, tuple(c * a for a in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (FieldValue, int)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (FieldValue, int)) and not isinstance(other, bool):
            return self * self.algebra.field(other).inv()
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coords == other.coords and (self.algebra is other.algebra or self.algebra == other.algebra)

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        terms = []
        for c, nm in zip(self.coords, self.algebra.names):
            if not c:
                continue
            terms.append(nm if c == 1 else f"{c}*{nm}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"AlgebraElement({self})"


def new_algebra(
    dim: int,
    constants: Iterable[tuple],
    field: Field | str = QQ,
    names: Sequence[str] | None = None,
    name: str = "",
) -> Algebra:
    """Build an algebra from ``(i, j, k, value)`` quadruples.

    Values may be field elements, ints, or scalar literals. A triple listed
    twice raises :class:`DuplicateTriple`.
    """
    if isinstance(field, str):
        field = field_from_descriptor(field)
    table = {}
    for i, j, k, value in constants:
        key = (i, j, k)
        for idx in key:
            if not isinstance(idx, int) or not 0 <= idx < dim:
                raise IndexOutOfRange(f"index {idx!r} outside [0, {dim})")
        if key in table:
            raise DuplicateTriple(f"structure constant {key} given twice")
        table[key] = field(value)
    return Algebra(field, dim, table, names=names, name=name)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """``(ab)^k = sum_{i,j} B[i,j,k] a^i b^j``."""
    a._same(b)
    return AlgebraElement(a.algebra, a.algebra._product_coords(a.coords, b.coords))


def is_associative(alg: Algebra) -> bool:
    return alg.is_associative


def is_commutative(alg: Algebra) -> bool:
    return alg.is_commutative


def find_unit(alg: Algebra) -> AlgebraElement | None:
    return alg.unit


def left_mul_matrix(a: AlgebraElement) -> Matrix:
    return a.algebra.left_mul_matrix(a)


def right_mul_matrix(a: AlgebraElement) -> Matrix:
    return a.algebra.right_mul_matrix(a)
