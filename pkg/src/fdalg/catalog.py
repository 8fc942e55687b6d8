"""Built-in algebras.

Names accepted by :func:`builtin`:

``rational``     the field itself, dimension 1
``complex``      basis 1, i with i^2 = -1
``dual``         basis 1, eps with eps^2 = 0
``quaternions``  basis 1, i, j, k with i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j
``octonions``    basis 1, e1..e7, Cayley multiplication table below
``matrix <m>``   m x m matrices in the matrix-unit basis

Every builtin uses the default basis names ``e0 .. e{n-1}`` and can be built
over any supported field.
"""

from __future__ import annotations

from .algebra import Algebra, new_algebra
from .errors import UnknownBuiltin
from .field import QQ, Field

__all__ = ["builtin", "BUILTIN_NAMES", "OCTONION_LINES", "matrix_algebra", "matrix_index"]

BUILTIN_NAMES = ("rational", "complex", "dual", "quaternions", "octonions", "matrix <m>")

# Oriented lines of the Fano plane: for (a, b, c), e_a e_b = e_c and cyclically,
# reversed order flips the sign. e0 is the unit and e_i^2 = -e0 for i > 0.
OCTONION_LINES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))


def _with_unit(n, products):
    """Quadruples for a unital algebra with e0 as unit plus the given products."""
    quads = [(0, i, i, 1) for i in range(n)] + [(i, 0, i, 1) for i in range(1, n)]
    return quads + list(products)


def _rational(field):
    return new_algebra(1, [(0, 0, 0, 1)], field, name="rational")


def _complex(field):
    return new_algebra(2, _with_unit(2, [(1, 1, 0, -1)]), field, name="complex")


def _dual(field):
    return new_algebra(2, _with_unit(2, []), field, name="dual")


def _quaternions(field):
    products = [(i, i, 0, -1) for i in (1, 2, 3)]
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        products += [(a, b, c, 1), (b, a, c, -1)]
    return new_algebra(4, _with_unit(4, products), field, name="quaternions")


def _octonions(field):
    products = [(i, i, 0, -1) for i in range(1, 8)]
    for a, b, c in OCTONION_LINES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            products += [(x, y, z, 1), (y, x, z, -1)]
    return new_algebra(8, _with_unit(8, products), field, name="octonions")


def matrix_index(m: int, p: int, q: int) -> int:
    """Position of the matrix unit e^p_q (row p, column q) in the row-major basis."""
    return p * m + q


def matrix_algebra(m: int, field: Field = QQ) -> Algebra:
    """m x m matrices; e^p_q e^s_t = delta(q, s) e^p_t."""
    if m < 1:
        raise UnknownBuiltin(f"matrix order must be at least 1, got {m}")
    quads = [
        (matrix_index(m, p, q), matrix_index(m, q, t), matrix_index(m, p, t), 1)
        for p in range(m)
        for q in range(m)
        for t in range(m)
    ]
    return new_algebra(m * m, quads, field, name=f"matrix {m}")


_FIXED = {
    "rational": _rational,
    "complex": _complex,
    "dual": _dual,
    "quaternions": _quaternions,
    "octonions": _octonions,
}


def builtin(name: str, field: Field = QQ) -> Algebra:
    words = name.split()
    if len(words) == 1 and words[0] in _FIXED:
        return _FIXED[words[0]](field)
    if len(words) == 2 and words[0] == "matrix" and words[1].isdigit():
        return matrix_algebra(int(words[1]), field)
    raise UnknownBuiltin(f"unknown builtin algebra {name!r}; known: {', '.join(BUILTIN_NAMES)}")
