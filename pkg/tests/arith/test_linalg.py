#!/usr/bin/env python3

import os
from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from mintk.arith import PrimeField, RationalField, rref, rank, nullspace, matmul, EchelonBasis

cwd = os.path.dirname(os.path.abspath(__file__))

F7 = PrimeField(7)
Q = RationalField()

matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


def test_rref():
    A = F7.asarray([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    R, pivots = rref(A, F7)
    assert pivots == [0, 1]
    assert R.tolist() == [[1, 0, 1], [0, 1, 1]]
    assert rank(A, F7) == 2
    assert A.tolist() == [[1, 2, 3], [2, 4, 6], [0, 1, 1]]


def test_rational_nullspace():
    A = Q.asarray([[Fraction(1), Fraction(1, 2)], [Fraction(2), Fraction(1)]])
    K = nullspace(A, Q)
    assert K.shape == (1, 2)
    assert all(v == 0 for v in matmul(A, K.T, Q).flatten())


def test_empty_shapes():
    assert rank(F7.zeros((0, 3)), F7) == 0
    assert nullspace(F7.zeros((0, 3)), F7).shape == (3, 3)
    assert matmul(F7.zeros((2, 0)), F7.zeros((0, 3)), F7).shape == (2, 3)


def test_large_prime_matmul():
    P = PrimeField(2147483647)
    A = P.asarray([[P.p - 1] * 4])
    B = P.asarray([[P.p - 1]] * 4)
    assert matmul(A, B, P)[0, 0] == 4


def test_echelon_basis():
    basis = EchelonBasis(3, F7)
    assert basis.add(F7.asarray([1, 1, 0]))
    assert not basis.add(F7.asarray([2, 2, 0]))
    assert basis.contains(F7.asarray([3, 3, 0]))
    assert not basis.contains(F7.asarray([0, 0, 1]))
    assert basis.rank == 1
    assert basis.extend(F7.asarray([[0, 1, 0], [0, 0, 1], [1, 0, 0]])) == 2
    assert basis.is_full()


@settings(max_examples=50)
@given(matrices)
def test_rank_nullity(rows):
    A = F7.asarray(rows)
    K = nullspace(A, F7)
    assert rank(A, F7) + K.shape[0] == A.shape[1]
    if K.shape[0]:
        assert not np.any(matmul(A, K.T, F7))
