"""Exact linear equations in finite-dimensional algebras given by structure constants."""

from .algebra import Algebra, AlgebraElement, find_unit, is_associative, is_commutative, multiply, new_algebra
from .catalog import builtin, matrix_algebra
from .errors import *  # noqa: F401,F403
from .field import GF, QQ, FieldValue, field_from_descriptor
from .linalg import Affine, Inconsistent, Matrix, Unique, det, invert_matrix, kernel, rref, solve_system
from .operator import (
    Grouping,
    OperatorExpression,
    SandwichTerm,
    TensorOperator,
    apply_tensor,
    commutator_unit_solve,
    inverse_tensor,
    is_right_invertible,
    operator_matrix,
    right_inverse,
    solve_linear,
)

__version__ = "0.1.0"
