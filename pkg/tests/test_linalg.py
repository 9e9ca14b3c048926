import random
from fractions import Fraction as Q

import pytest

from axial import linalg


def rand_matrix(rng, rows, cols):
    return [[Q(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(cols)]
            for _ in range(rows)]


def test_identity_has_full_rank():
    _, rank, kernel = linalg.rref_and_kernel(linalg.identity(3))
    assert rank == 3 and kernel == []


def test_zero_matrix_kernel():
    _, rank, kernel = linalg.rref_and_kernel(linalg.zeros(2, 2))
    assert rank == 0 and len(kernel) == 2


def test_rank_nullity_and_exact_kernel():
    rng = random.Random(2)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = rand_matrix(rng, rows, cols)
        _, rank, kernel = linalg.rref_and_kernel(m)
        assert rank + len(kernel) == cols
        for v in kernel:
            assert linalg.is_zero_vec(linalg.matvec(m, v))


def test_rref_is_canonical():
    rng = random.Random(9)
    for _ in range(10):
        m = rand_matrix(rng, 4, 4)
        red, _ = linalg.rref(m)
        again, _ = linalg.rref(red)
        assert again == red
        shuffled = m[::-1]
        red2, _ = linalg.rref(shuffled)
        assert red2 == red


def test_det_and_inverse():
    m = [[Q(2), Q(1)], [Q(1), Q(1)]]
    assert linalg.det(m) == 1
    inv = linalg.inverse(m)
    assert linalg.matmul(m, inv) == linalg.identity(2)
    singular = [[Q(1), Q(2)], [Q(2), Q(4)]]
    assert linalg.det(singular) == 0
    with pytest.raises(ValueError):
        linalg.inverse(singular)


def test_echelon_span_equality_is_subspace_equality():
    basis1 = linalg.echelon_span([[Q(1), Q(1), Q(0)], [Q(0), Q(1), Q(1)]])
    basis2 = linalg.echelon_span([[Q(1), Q(2), Q(1)], [Q(2), Q(3), Q(1)]])
    assert basis1 == basis2
    assert linalg.in_span(basis1, [Q(1), Q(0), Q(-1)])
    assert not linalg.in_span(basis1, [Q(0), Q(0), Q(1)])


def test_matrix_order():
    rot = [[Q(0), Q(-1)], [Q(1), Q(0)]]  # quarter turn
    assert linalg.matrix_order(rot, 12) == 4
    assert linalg.matrix_order(linalg.identity(3), 12) == 1
    shear = [[Q(1), Q(1)], [Q(0), Q(1)]]
    assert linalg.matrix_order(shear, 12) is None


def test_matvec_dimension_mismatch():
    with pytest.raises(ValueError):
        linalg.matvec([[Q(1), Q(2)]], [Q(1)])
