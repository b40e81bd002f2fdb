from flint import fmpq

from hecke import linalg as la


def test_rank_nullspace_and_span():
    m = la.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert la.rank(m) == 2
    k = la.nullspace(m)
    assert k.ncols() == 1
    assert la.is_zero(m * k)
    basis = la.from_rows([[1, 0], [2, 1], [3, 1]])
    assert la.in_span(basis, la.from_rows([[1], [3], [4]]))
    assert not la.in_span(basis, la.from_rows([[1], [0], [0]]))


def test_eigen_and_jordan():
    j = la.from_rows([[7, 1, 0], [0, 7, 0], [0, 0, 7]])
    assert la.rational_eigenvalues(j) == ([(fmpq(7), 3)], 0)
    assert la.rational_eigenvalues(la.from_rows([[0, 2], [1, 0]])) == ([], 2)
    assert sorted(la.jordan_block_sizes(j, 7)) == [1, 2]
    assert la.generalized_eigenspace(j, 7).ncols() == 3
    assert la.eigenspace(j, 7).ncols() == 2


def test_string_round_trip():
    m = la.from_rows([["1/2", -3], [0, "7/9"]])
    assert la.mat_from_strings(la.mat_to_strings(m), 2) == m
