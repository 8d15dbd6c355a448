import random
from fractions import Fraction

import pytest

from octoforge.fields import RATIONAL, FieldSpec
from octoforge.linalg import (Matrix, Subspace, determinant, inverse, kernel,
                              rref, solve, span_membership)

F5 = FieldSpec.prime(5)


def qm(rows):
    return Matrix(RATIONAL, [[Fraction(x) for x in row] for row in rows])


def qv(values):
    return tuple(Fraction(x) for x in values)


def random_matrix(rng, nrows, ncols, lo=-6, hi=6):
    return qm([[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)])


# -- rref ---------------------------------------------------------------------


def test_rref_identity():
    m = Matrix.identity(RATIONAL, 2)
    r, rank, pivots = rref(m)
    assert r == m and rank == 2 and pivots == (0, 1)


def test_rref_rank_one():
    r, rank, pivots = rref(qm([[1, 2], [2, 4]]))
    assert r == qm([[1, 2], [0, 0]])
    assert rank == 1 and pivots == (0,)


def test_rref_zero_matrix():
    m = Matrix.zeros(RATIONAL, 3, 2)
    r, rank, pivots = rref(m)
    assert r == m and rank == 0 and pivots == ()


def test_rref_idempotent_randomized():
    rng = random.Random(7)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        r1, rank1, piv1 = rref(m)
        r2, rank2, piv2 = rref(r1)
        assert (r1, rank1, piv1) == (r2, rank2, piv2)


# -- solve ----------------------------------------------------------------------


def test_solve_identity():
    b = qv([3, -2])
    assert solve(Matrix.identity(RATIONAL, 2), b) == b


def test_solve_zeroes_free_variables():
    assert solve(qm([[1, 1]]), qv([2])) == qv([2, 0])


def test_solve_inconsistent():
    assert solve(qm([[1], [1]]), qv([0, 1])) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(qm([[1, 1]]), qv([1, 2]))


def test_solve_randomized_is_solution():
    rng = random.Random(11)
    for _ in range(40):
        a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        x = qv([rng.randint(-4, 4) for _ in range(a.ncols)])
        b = a.matvec(x)
        got = solve(a, b)
        assert got is not None
        assert a.matvec(got) == b


# -- kernel ---------------------------------------------------------------------


def test_kernel_identity_trivial():
    assert kernel(Matrix.identity(RATIONAL, 3)).dim == 0


def test_kernel_zero_matrix_full():
    k = kernel(Matrix.zeros(RATIONAL, 2, 3))
    assert k.dim == 3 and k.is_full


def test_kernel_single_relation():
    a = qm([[1, 2]])
    k = kernel(a)
    assert k.dim == 1
    for row in k.basis_rows:  # oracle: a.x = 0 exactly
        assert not any(a.matvec(row))


def test_rank_nullity_randomized():
    rng = random.Random(13)
    for _ in range(40):
        a = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        _, rank, _ = rref(a)
        k = kernel(a)
        assert rank + k.dim == a.ncols
        for row in k.basis_rows:
            assert not any(a.matvec(row))


# -- membership and subspaces ------------------------------------------------------


def test_span_membership_of_basis_row():
    s = Subspace.from_vectors(RATIONAL, 3, [qv([1, 0, 2]), qv([0, 1, 0])])
    coords = span_membership(s, qv([1, 0, 2]))
    assert coords == qv([1, 0])


def test_span_membership_reconstructs():
    rng = random.Random(17)
    s = Subspace.from_vectors(RATIONAL, 4,
                              [qv([1, 2, 0, 1]), qv([0, 1, 1, 1])])
    for _ in range(20):
        c1, c2 = rng.randint(-5, 5), rng.randint(-5, 5)
        v = tuple(c1 * a + c2 * b for a, b in zip(*s.basis_rows))
        coords = s.membership(v)
        assert coords is not None
        rebuilt = tuple(sum(c * row[j] for c, row in zip(coords, s.basis_rows))
                        for j in range(4))
        assert rebuilt == v


def test_span_membership_non_member():
    s = Subspace.from_vectors(RATIONAL, 3, [qv([1, 0, 0])])
    assert span_membership(s, qv([0, 1, 0])) is None


def test_subspace_equality_is_canonical():
    a = Subspace.from_vectors(RATIONAL, 3, [qv([1, 1, 0]), qv([0, 2, 2])])
    b = Subspace.from_vectors(RATIONAL, 3, [qv([2, 4, 2]), qv([3, 3, 0])])
    assert a == b
    assert a != Subspace.from_vectors(RATIONAL, 3, [qv([1, 0, 0])])


# -- determinant and inverse ---------------------------------------------------------


def test_determinant_examples():
    assert determinant(Matrix.identity(RATIONAL, 3)) == Fraction(1)
    assert determinant(qm([[0, 1], [1, 0]])) == Fraction(-1)
    assert determinant(qm([[1, 2], [2, 4]])) == Fraction(0)


def test_determinant_fractional_entries():
    m = Matrix(RATIONAL, [[Fraction(1, 2), Fraction(1, 3)],
                          [Fraction(2), Fraction(5)]])
    assert determinant(m) == Fraction(11, 6)


def test_determinant_non_square():
    with pytest.raises(ValueError):
        determinant(qm([[1, 2]]))


def test_determinant_multiplicative_randomized():
    rng = random.Random(19)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = random_matrix(rng, n, n)
        b = random_matrix(rng, n, n)
        assert determinant(a.matmul(b)) == determinant(a) * determinant(b)


def test_inverse_round_trip():
    rng = random.Random(23)
    found = 0
    while found < 10:
        a = random_matrix(rng, 3, 3)
        if not determinant(a):
            continue
        found += 1
        assert a.matmul(inverse(a)) == Matrix.identity(RATIONAL, 3)


def test_inverse_singular_none():
    assert inverse(qm([[1, 2], [2, 4]])) is None


# -- prime field sanity -----------------------------------------------------------


def test_prime_field_determinant():
    # 2*3 - 1*1 = 5 = 0 in F_5: singular there, invertible over Q
    m = Matrix(F5, [[F5.from_int(2), F5.from_int(1)],
                    [F5.from_int(1), F5.from_int(3)]])
    assert not determinant(m)
    assert kernel(m).dim == 1


def test_prime_field_solve():
    m = Matrix(F5, [[F5.from_int(2), F5.from_int(0)],
                    [F5.from_int(0), F5.from_int(3)]])
    b = (F5.from_int(1), F5.from_int(1))
    x = solve(m, b)
    assert x == (F5.from_int(3), F5.from_int(2))
    assert m.matvec(x) == b
