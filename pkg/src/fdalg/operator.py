"""Sandwich equations ``sum_s l_s * x * r_s = b`` over a structure-constant algebra.

An :class:`OperatorExpression` is a list of :class:`SandwichTerm`. Each term
fixes the parenthesization, ``(l x) r`` or ``l (x r)``; the two agree in an
associative algebra. The expression is a linear map of the algebra, and its
coordinate matrix turns every question about the equation into linear algebra
over the scalar field:

* :func:`solve_linear` classifies the solution set (unique / affine / empty);
* :func:`inverse_tensor` writes the inverse map again as a sandwich sum
  ``b -> sum_{p,q} c[p][q] (e_p b) e_q``;
* :func:`is_right_invertible` and :func:`right_inverse` decide ``a x = 1``;
* :func:`commutator_unit_solve` studies ``a x - x a = 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra, AlgebraElement
from .errors import (
    DimensionMismatch,
    MixedAlgebras,
    NonassociativeUnsupported,
    NoRightInverse,
    NotRepresentable,
    Singular,
)
from .linalg import Affine, Inconsistent, Matrix, Unique, det, invert_matrix, solve_system

__all__ = [
    "Grouping",
    "SandwichTerm",
    "OperatorExpression",
    "TensorOperator",
    "Unique",
    "Affine",
    "Inconsistent",
    "operator_matrix",
    "solve_linear",
    "inverse_tensor",
    "apply_tensor",
    "is_right_invertible",
    "right_inverse",
    "commutator_expression",
    "commutator_unit_solve",
]


class Grouping(enum.Enum):
    LEFT_FIRST = "L"  # (left x) right
    RIGHT_FIRST = "R"  # left (x right)


@dataclass(frozen=True)
class SandwichTerm:
    left: AlgebraElement
    right: AlgebraElement
    grouping: Grouping = Grouping.LEFT_FIRST

    def __post_init__(self):
        self.left._same(self.right)

    @property
    def algebra(self) -> Algebra:
        return self.left.algebra

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        if self.grouping is Grouping.LEFT_FIRST:
            return (self.left * x) * self.right
        return self.left * (x * self.right)

    def matrix(self) -> Matrix:
        alg = self.algebra
        L = alg.left_mul_matrix(self.left)
        R = alg.right_mul_matrix(self.right)
        return R @ L if self.grouping is Grouping.LEFT_FIRST else L @ R


class OperatorExpression:
    """The linear map ``x -> sum of terms``; calling it evaluates by direct products."""

    def __init__(self, terms: Sequence[SandwichTerm | tuple]):
        built = []
        for t in terms:
            if not isinstance(t, SandwichTerm):
                t = SandwichTerm(*t)
            built.append(t)
        if not built:
            raise ValueError("an operator expression needs at least one term")
        first = built[0].algebra
        for t in built[1:]:
            if t.algebra is not first and t.algebra != first:
                raise MixedAlgebras("all terms must live in one algebra")
        self.terms = tuple(built)

    @property
    def algebra(self) -> Algebra:
        return self.terms[0].algebra

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        self.terms[0].left._same(x)
        result = self.algebra.zero()
        for t in self.terms:
            result = result + t(x)
        return result

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __repr__(self):
        parts = [f"({t.left})·x·({t.right})[{t.grouping.value}]" for t in self.terms]
        return "OperatorExpression(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class TensorOperator:
    """``b -> sum_{p,q} coefficients[p][q] * (e_p b) e_q``."""

    algebra: Algebra
    coefficients: tuple

    def __call__(self, b: AlgebraElement) -> AlgebraElement:
        return apply_tensor(self, b)

    def nonzero(self) -> list[tuple[int, int, object]]:
        return [(p, q, c) for p, row in enumerate(self.coefficients) for q, c in enumerate(row) if c]

    @classmethod
    def from_entries(cls, algebra: Algebra, entries) -> TensorOperator:
        """Build from ``(p, q, value)`` triples; unlisted coefficients are zero."""
        n, F = algebra.dim, algebra.field
        c = [[F.zero] * n for _ in range(n)]
        for p, q, v in entries:
            if not (0 <= p < n and 0 <= q < n):
                raise DimensionMismatch(f"tensor index ({p}, {q}) outside dimension {n}")
            c[p][q] = c[p][q] + F(v)
        return cls(algebra, tuple(tuple(row) for row in c))


def _as_expression(expr) -> OperatorExpression:
    return expr if isinstance(expr, OperatorExpression) else OperatorExpression(expr)


def operator_matrix(expr) -> Matrix:
    """Coordinate matrix M with coords(expr(x)) = M coords(x)."""
    expr = _as_expression(expr)
    terms = iter(expr.terms)
    total = next(terms).matrix()
    for t in terms:
        total = total + t.matrix()
    return total


def _lift(outcome, alg: Algebra):
    if isinstance(outcome, Unique):
        return Unique(alg.element(outcome.solution))
    if isinstance(outcome, Affine):
        return Affine(alg.element(outcome.particular), [alg.element(v) for v in outcome.kernel])
    return outcome


def solve_linear(expr, b: AlgebraElement) -> Unique | Affine | Inconsistent:
    expr = _as_expression(expr)
    alg = expr.algebra
    expr.terms[0].left._same(b)
    return _lift(solve_system(operator_matrix(expr), b.coords), alg)


def _basis_sandwich_matrices(alg: Algebra) -> list[list[Matrix]]:
    basis = alg.basis_elements()
    L = [alg.left_mul_matrix(e) for e in basis]
    R = [alg.right_mul_matrix(e) for e in basis]
    return [[R[q] @ L[p] for q in range(alg.dim)] for p in range(alg.dim)]


def inverse_tensor(expr) -> TensorOperator:
    """Write the inverse of a bijective sandwich operator as a sandwich sum.

    Raises :class:`Singular` when the operator is not invertible and
    :class:`NotRepresentable` when its inverse is not a combination of the
    maps ``b -> (e_p b) e_q``. Free coefficients are set to zero.
    """
    expr = _as_expression(expr)
    alg = expr.algebra
    if not alg.is_associative:
        raise NonassociativeUnsupported("tensor-form inverse is defined for associative algebras only")
    M = operator_matrix(expr)
    if not det(M):
        raise Singular("operator matrix has zero determinant")
    target = invert_matrix(M)
    n, F = alg.dim, alg.field
    blocks = _basis_sandwich_matrices(alg)
    # equation (k, j): sum_{p,q} c[p][q] blocks[p][q][k, j] = target[k, j]
    rows, rhs = [], []
    for k in range(n):
        for j in range(n):
            rows.append([blocks[p][q][k, j] for p in range(n) for q in range(n)])
            rhs.append(target[k, j])
    outcome = solve_system(Matrix(F, rows, ncols=n * n), rhs)
    if isinstance(outcome, Inconsistent):
        raise NotRepresentable("inverse is not in the span of basis sandwich operators")
    flat = outcome.solution if isinstance(outcome, Unique) else outcome.particular
    coeffs = tuple(tuple(flat[p * n : (p + 1) * n]) for p in range(n))
    return TensorOperator(alg, coeffs)


def apply_tensor(t: TensorOperator, b: AlgebraElement) -> AlgebraElement:
    alg = t.algebra
    alg._own(b)
    result = alg.zero()
    for p, q, c in t.nonzero():
        result = result + ((alg.basis(p) * b) * alg.basis(q)) * c
    return result


def is_right_invertible(a: AlgebraElement) -> bool:
    return bool(det(a.algebra.left_mul_matrix(a)))


def right_inverse(a: AlgebraElement) -> AlgebraElement:
    """The unique x with a x = 1; raises NoRightInverse otherwise."""
    unit = a.algebra.require_unit()
    outcome = solve_linear([SandwichTerm(a, unit)], unit)
    if isinstance(outcome, Unique):
        return outcome.solution
    raise NoRightInverse(f"{a} has no right inverse")


def commutator_expression(a: AlgebraElement) -> OperatorExpression:
    """``x -> a x - x a`` as a sandwich sum."""
    unit = a.algebra.require_unit()
    return OperatorExpression([SandwichTerm(a, unit), SandwichTerm(-unit, a)])


def commutator_unit_solve(a: AlgebraElement) -> Unique | Affine | Inconsistent:
    """Solve ``a x - x a = 1``."""
    return solve_linear(commutator_expression(a), a.algebra.require_unit())
