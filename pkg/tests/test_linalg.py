from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redcenter.cyclo import Cyclo
from redcenter.linalg import Embedding, Matrix, ShapeMismatch, Singular, block_diag, same_column_space

ints = st.integers(min_value=-4, max_value=4)


def square(n):
    return st.lists(st.lists(ints, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix.from_dense)


def test_identity_and_products():
    A = Matrix.from_dense([[1, 2], [3, 4]])
    assert A @ Matrix.identity(2) == A
    assert (A @ A.inverse()).is_identity()
    assert A.trace() == 5
    assert A.T.T == A
    assert A.kron(Matrix.identity(2)).shape == (4, 4)


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(ShapeMismatch):
        Matrix.identity(2) + Matrix.identity(3)


def test_singular_inverse():
    with pytest.raises(Singular):
        Matrix.from_dense([[1, 2], [2, 4]]).inverse()


def test_nullspace_and_rank():
    A = Matrix.from_dense([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert A.rank() == 2
    ns = A.nullspace()
    assert len(ns) == 1
    col = Matrix.from_columns(3, ns)
    assert (A @ col).is_zero()


def test_cyclotomic_entries():
    i = Cyclo.zeta(4)
    A = Matrix.from_dense([[0, -i], [i, 0]])
    assert (A @ A).is_identity()
    assert A.rank() == 2


def test_column_space_and_embedding():
    E = Matrix.from_dense([[1, 0], [1, 1], [0, 1]])
    B = Matrix.from_dense([[1, 1], [2, 1], [1, 0]])
    assert same_column_space(E, B)
    emb = Embedding(E)
    C = emb.coords(B)
    assert E @ C == B


def test_block_diag():
    D = block_diag(Matrix.identity(2), Matrix.scalar(1, 3))
    assert D.shape == (3, 3)
    assert D[2, 2] == 3


@settings(max_examples=60, deadline=None)
@given(square(3), square(3), square(3))
def test_matrix_ring_laws(A, B, C):
    assert (A @ B) @ C == A @ (B @ C)
    assert A @ (B + C) == A @ B + A @ C
    assert (A @ B).T == B.T @ A.T
    assert (A @ B).trace() == (B @ A).trace()


@settings(max_examples=60, deadline=None)
@given(square(3))
def test_rank_nullity(A):
    assert A.rank() + len(A.nullspace()) == 3
    if A.rank() == 3:
        assert (A @ A.inverse()).is_identity()
        x = A.solve(Matrix.from_dense([[1], [Fraction(1, 2)], [0]]))
        assert A @ x == Matrix.from_dense([[1], [Fraction(1, 2)], [0]])
