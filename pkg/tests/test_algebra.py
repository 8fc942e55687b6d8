import random
from itertools import product

import pytest

from fdalg.algebra import Algebra, find_unit, left_mul_matrix, multiply, new_algebra, right_mul_matrix
from fdalg.catalog import OCTONION_LINES, builtin, matrix_algebra, matrix_index
from fdalg.errors import DuplicateTriple, IndexOutOfRange, MixedAlgebras, UnknownBuiltin
from fdalg.field import GF, QQ
from fdalg.linalg import Matrix, det

from oracles import naive_matrix_mul, random_element

BUILTINS = ["rational", "complex", "dual", "quaternions", "octonions", "matrix 1", "matrix 2", "matrix 3"]


@pytest.fixture(scope="module")
def quat():
    return builtin("quaternions")


@pytest.fixture(scope="module")
def octo():
    return builtin("octonions")


def test_field_as_algebra():
    alg = new_algebra(1, [(0, 0, 0, 1)])
    x = alg.element([QQ.parse("2/3")])
    assert (x * x).coords == (QQ.parse("4/9"),)


def test_complex_numbers():
    c = new_algebra(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, -1)])
    i = c.basis(1)
    assert i * i == -c.basis(0)
    assert c == builtin("complex")


def test_construction_errors():
    with pytest.raises(IndexOutOfRange):
        new_algebra(2, [(0, 0, 2, 1)])
    with pytest.raises(DuplicateTriple):
        new_algebra(2, [(0, 0, 0, 1), (0, 0, 0, 2)])


def test_zero_constants_are_dropped():
    alg = new_algebra(2, [(0, 0, 0, 0), (1, 1, 1, "3/2")])
    assert alg.constants == {(1, 1, 1): QQ.parse("3/2")}


def test_quaternion_products(quat):
    one, i, j, k = quat.basis_elements()
    assert i * j == k and j * i == -k
    assert j * k == i and k * i == j
    assert i * i == j * j == k * k == -one


def test_product_with_zero():
    rng = random.Random(1)
    for name in BUILTINS:
        alg = builtin(name)
        a = random_element(rng, alg)
        assert (a * alg.zero()).is_zero() and (alg.zero() * a).is_zero()


def test_octonion_witness_of_nonassociativity(octo):
    e = octo.basis
    lhs = (e(1) * e(2)) * e(4)
    rhs = e(1) * (e(2) * e(4))
    # direct evaluation: e1 e2 = e3, e3 e4 = e7; e2 e4 = e6, e1 e6 = -e7
    assert lhs == e(7) and rhs == -e(7)
    assert lhs != rhs


def test_octonion_table_is_a_composition_algebra(octo):
    rng = random.Random(2)

    def norm(x):
        return sum((c * c for c in x.coords), QQ.zero)

    for _ in range(20):
        a, b = random_element(rng, octo), random_element(rng, octo)
        assert norm(a * b) == norm(a) * norm(b)
        # alternative laws
        assert (a * a) * b == a * (a * b)
        assert (b * a) * a == b * (a * a)


def test_mixed_algebras(quat):
    c = builtin("complex")
    with pytest.raises(MixedAlgebras):
        multiply(quat.basis(1), c.basis(1))
    with pytest.raises(MixedAlgebras):
        quat.basis(0) + c.basis(0)


@pytest.mark.parametrize(
    "name, assoc, comm",
    [
        ("rational", True, True),
        ("complex", True, True),
        ("dual", True, True),
        ("quaternions", True, False),
        ("octonions", False, False),
        ("matrix 2", True, False),
        ("matrix 1", True, True),
    ],
)
def test_structural_flags(name, assoc, comm):
    alg = builtin(name)
    assert alg.is_associative is assoc
    assert alg.is_commutative is comm


def test_flags_agree_with_exhaustive_check():
    for name in ("matrix 2", "octonions"):
        alg = builtin(name)
        basis = alg.basis_elements()
        count, assoc = 0, True
        for x, y, z in product(basis, repeat=3):
            count += 1
            assoc &= (x * y) * z == x * (y * z)
        assert count == alg.dim**3
        assert assoc is alg.is_associative


def test_find_unit():
    m2 = builtin("matrix 2")
    assert find_unit(m2) == m2.element([1, 0, 0, 1])
    assert find_unit(builtin("quaternions")) == builtin("quaternions").basis(0)
    assert find_unit(new_algebra(1, [(0, 0, 0, 0)])) is None
    assert find_unit(new_algebra(1, [])) is None


def test_unit_not_at_index_zero():
    # complex numbers with basis (i, 1)
    alg = new_algebra(2, [(1, 1, 1, 1), (0, 1, 0, 1), (1, 0, 0, 1), (0, 0, 1, -1)])
    assert alg.unit == alg.basis(1)


def test_one_sided_unit_is_not_a_unit():
    # e0 e_j = e_j for all j but e1 e0 = 0: left unit only
    alg = new_algebra(2, [(0, 0, 0, 1), (0, 1, 1, 1)])
    assert alg.unit is None


def test_unit_is_unique_and_two_sided():
    rng = random.Random(3)
    for name in BUILTINS:
        alg = builtin(name)
        u = alg.unit
        assert u is not None
        assert find_unit(alg) == u
        for x in alg.basis_elements():
            assert u * x == x == x * u
        a = random_element(rng, alg)
        assert u * a == a == a * u


def test_left_mul_of_unit_is_identity():
    for name in BUILTINS:
        alg = builtin(name)
        assert left_mul_matrix(alg.unit) == Matrix.identity(QQ, alg.dim)
        assert right_mul_matrix(alg.unit) == Matrix.identity(QQ, alg.dim)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_matrix_algebra_left_mul_is_block_a_times_identity(m):
    rng = random.Random(m)
    alg = matrix_algebra(m)
    a = random_element(rng, alg)
    L = left_mul_matrix(a)
    # block (i, j) of L is a^i_j E_m
    for i, j, r, c in product(range(m), repeat=4):
        expected = a[matrix_index(m, i, j)] if r == c else 0
        assert L[i * m + r, j * m + c] == expected


def test_matrix_algebra_product_is_matrix_product():
    rng = random.Random(4)
    m = 3
    alg = matrix_algebra(m)
    for _ in range(10):
        a, b = random_element(rng, alg), random_element(rng, alg)
        am = [[a[matrix_index(m, p, q)] for q in range(m)] for p in range(m)]
        bm = [[b[matrix_index(m, p, q)] for q in range(m)] for p in range(m)]
        cm = naive_matrix_mul(am, bm)
        assert (a * b).coords == tuple(cm[p][q] for p in range(m) for q in range(m))


def test_quaternion_left_mul_agrees_with_multiply(quat):
    i = quat.basis(1)
    L = left_mul_matrix(i)
    assert L.apply(quat.basis(2).coords) == quat.basis(3).coords
    for a in quat.basis_elements():
        La, Ra = left_mul_matrix(a), right_mul_matrix(a)
        for x in quat.basis_elements():
            assert La.apply(x.coords) == (a * x).coords
            assert Ra.apply(x.coords) == (x * a).coords


@pytest.mark.parametrize("name", BUILTINS)
def test_regular_representation_properties(name):
    rng = random.Random(BUILTINS.index(name))
    alg = builtin(name)
    for _ in range(5):
        a, b, x = (random_element(rng, alg) for _ in range(3))
        alpha = QQ.parse(f"{rng.randint(-4, 4)}/{rng.randint(1, 3)}")
        # bilinearity
        assert (a * alpha + b) * x == (a * x) * alpha + b * x
        assert x * (a * alpha + b) == (x * a) * alpha + x * b
        assert left_mul_matrix(a).apply(x.coords) == (a * x).coords
        assert right_mul_matrix(a).apply(x.coords) == (x * a).coords
        if alg.is_associative:
            assert left_mul_matrix(a * b) == left_mul_matrix(a) @ left_mul_matrix(b)
            assert right_mul_matrix(a * b) == right_mul_matrix(b) @ right_mul_matrix(a)


def test_builtin_catalog():
    m2 = builtin("matrix 2")
    assert m2.dim == 4 and m2.is_associative
    q = builtin("quaternions")
    assert q.dim == 4 and q.unit == q.basis(0)
    o = builtin("octonions")
    assert o.dim == 8 and not o.is_associative
    d = builtin("dual")
    eps = d.basis(1)
    assert (eps * eps).is_zero()
    for bad in ("sedenions", "matrix", "matrix 0", "matrix x"):
        with pytest.raises(UnknownBuiltin):
            builtin(bad)


def test_octonion_left_mul_never_singular(octo):
    rng = random.Random(8)
    for _ in range(20):
        a = random_element(rng, octo)
        if a.is_zero():
            continue
        assert det(left_mul_matrix(a)) != 0


def test_octonion_lines_cover_every_pair_once():
    pairs = set()
    for line in OCTONION_LINES:
        for x in line:
            for y in line:
                if x < y:
                    pairs.add((x, y))
    assert len(pairs) == 21 and len(OCTONION_LINES) == 7


def test_builtins_over_prime_fields():
    F = GF(2)
    q = builtin("quaternions", F)
    # char 2 collapses signs: the algebra becomes commutative
    assert q.is_commutative
    m = builtin("matrix 2", F)
    assert m.unit == m.element([1, 0, 0, 1])


def test_cached_flags_match_recomputation():
    alg = builtin("octonions")
    first = alg.is_associative
    fresh = Algebra(alg.field, alg.dim, alg.constants)
    assert fresh.is_associative == first
    assert alg == fresh
