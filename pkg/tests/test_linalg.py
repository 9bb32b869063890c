from fractions import Fraction

import pytest

from coloredfans.linalg import (
    dot,
    identity,
    invert,
    kernel_basis,
    mat,
    matmul,
    matvec,
    primitive,
    rank,
    reduce_mod_subspace,
    rref,
    subspace_basis,
    vec,
)


def test_primitive_clears_denominators_and_content():
    assert primitive(vec([Fraction(1, 2), Fraction(3, 4)])) == vec([2, 3])
    assert primitive(vec([4, 6])) == vec([2, 3])
    assert primitive(vec([0, 0])) == vec([0, 0])
    assert primitive(vec([-2, 4])) == vec([-1, 2])


def test_rref_and_rank():
    rows, pivots = rref([vec([1, 2, 3]), vec([2, 4, 6]), vec([0, 1, 1])])
    assert pivots == (0, 1)
    assert rank([vec([1, 2, 3]), vec([2, 4, 6])]) == 1
    assert rank([]) == 0


def test_invert_roundtrip():
    m = mat([[1, 2], [3, 5]])
    inv = invert(m)
    assert matmul(m, inv) == identity(2)
    assert invert(mat([[1, 2], [2, 4]])) is None


def test_kernel_basis_annihilates():
    rows = [vec([1, 1, 0]), vec([0, 1, 1])]
    basis = kernel_basis(rows, 3)
    assert len(basis) == 1
    for b in basis:
        assert all(dot(r, b) == 0 for r in rows)


def test_reduce_mod_subspace_zeroes_pivots():
    basis = subspace_basis([vec([1, 0, 2])])
    reduced = reduce_mod_subspace(vec([3, 1, 1]), basis)
    assert reduced[0] == 0
    assert reduced == vec([0, 1, -5])


def test_dot_dimension_mismatch():
    with pytest.raises(ValueError):
        dot(vec([1, 2]), vec([1, 2, 3]))


def test_matvec():
    assert matvec(mat([[0, 1], [1, 0]]), vec([2, 3])) == vec([3, 2])
