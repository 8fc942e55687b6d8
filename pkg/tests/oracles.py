"""Independent reference computations used to check the library.

None of these touch fdalg.linalg: they work on plain Fractions / ints.
"""

from fractions import Fraction
from itertools import product
import random


def cofactor_det(rows):
    """Laplace expansion along the first row; entries are Fractions or ints."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * a * cofactor_det(minor)
    return total


def rowspace_size_mod(rows, p):
    """Number of distinct vectors in the row space over GF(p), by enumeration."""
    ncols = len(rows[0]) if rows else 0
    seen = set()
    for coeffs in product(range(p), repeat=len(rows)):
        v = tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(ncols))
        seen.add(v)
    return len(seen)


def brute_solutions_mod(rows, rhs, p):
    """Every x in GF(p)^n with rows x = rhs."""
    n = len(rows[0])
    out = []
    for x in product(range(p), repeat=n):
        if all(sum(a * b for a, b in zip(r, x)) % p == b % p for r, b in zip(rows, rhs)):
            out.append(x)
    return out


def random_fraction(rng: random.Random, span=5, den=3):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_coords(rng: random.Random, field, n, span=4):
    from fdalg.field import RationalField

    if isinstance(field, RationalField):
        return [field(random_fraction(rng, span)) for _ in range(n)]
    return [field(rng.randrange(field.p)) for _ in range(n)]


def random_element(rng, alg, span=4):
    return alg.element(random_coords(rng, alg.field, alg.dim, span))


def naive_matrix_mul(a, b):
    """Plain m x m matrix product on nested lists."""
    m = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(m)) for j in range(m)] for i in range(m)]
