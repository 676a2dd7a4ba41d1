#!/usr/bin/env python3

import os

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mintk.arith import PrimeField
from mintk.ring import RingPresentation
from mintk.resolution import GradedMatrix, ModulePresentation, minimal_resolution
from mintk.minors import check_minors_in_mr, check_tensor_submatrix_law, check_tensor_embedding, \
    check_summand_inclusion, check_basis_change_invariance, border_tensor, random_homogeneous, \
    random_basis_change, homogeneous_forms, minimal_matrices, MinorVerdict, TheoremReport, judge
from mintk.errors import BadEmbeddingError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)
R = RingPresentation(F, ['x', 'y'], ['x^2', 'y^2'])


def test_minors_in_mr():
    A = GradedMatrix.from_rows(R, [['x', 'y'], ['y', 'x']], [0, 0])
    assert check_minors_in_mr(A, 1)
    assert check_minors_in_mr(A, 2)
    B = GradedMatrix.from_rows(R, [['1', 'y'], ['0', 'x']], [0, 0], [0, 1])
    check = check_minors_in_mr(B, 1)
    assert not check
    assert 'rows [0], columns [0]' in check.detail


def test_tensor_law():
    rng = np.random.default_rng(7)
    A = GradedMatrix.from_rows(R, [['x', 'y']], [0])
    B, rows, cols = border_tensor(A, 2, rng)
    assert B.shape == (3, 5)
    check_tensor_embedding(A, 2, B, rows, cols)
    for composition in ([1, 1], [2, 0], [0, 1]):
        assert check_tensor_submatrix_law(A, 2, B, composition, rows, cols)
    with pytest.raises(ValueError):
        check_tensor_submatrix_law(A, 2, B, [1])
    with pytest.raises(BadEmbeddingError):
        check_tensor_embedding(A, 2, B, [0, 1], [0, 2, 1, 3])
    with pytest.raises(BadEmbeddingError):
        check_tensor_embedding(A, 3, B, rows, cols)


def test_basis_change():
    rng = np.random.default_rng(1)
    A = GradedMatrix.from_rows(R, [['x', 'y', '0'], ['0', 'x', 'y']], [0, 0])
    U = random_basis_change(A.target, rng)
    assert all(U.entry(i, i) == R.one() for i in range(2))
    for r in (1, 2):
        assert check_basis_change_invariance(A, r, rng)


def test_random_homogeneous():
    rng = np.random.default_rng(3)
    p = random_homogeneous(R, 1, rng)
    assert p.is_zero() or p.homogeneous_degree() == 1
    assert random_homogeneous(R, -1, rng).is_zero()
    assert random_homogeneous(R, 3, rng).is_zero()


seeds = st.integers(0, 2 ** 32 - 1)


@settings(deadline=None)
@given(minimal_matrices(R, 3, 3), st.integers(1, 3))
def test_minors_in_mr_holds(A, r):
    assert check_minors_in_mr(A, r)


@settings(max_examples=25, deadline=None)
@given(minimal_matrices(R, 2, 2), st.integers(1, 2), seeds)
def test_tensor_law_holds(A, ell, seed):
    B, rows, cols = border_tensor(A, ell, np.random.default_rng(seed))
    assert check_tensor_submatrix_law(A, ell, B, [1] * ell, rows, cols)
    assert check_tensor_submatrix_law(A, ell, B, [min(A.shape)] + [0] * (ell - 1), rows, cols)


@settings(max_examples=25, deadline=None)
@given(minimal_matrices(R, 3, 3), seeds)
def test_basis_change_holds(A, seed):
    rng = np.random.default_rng(seed)
    for r in range(1, min(A.shape) + 1):
        assert check_basis_change_invariance(A, r, rng)


@given(homogeneous_forms(R, 1), homogeneous_forms(R, 3))
def test_homogeneous_forms(p, q):
    assert p.is_zero() or p.homogeneous_degree() == 1
    assert q.is_zero()


def test_summand_inclusion():
    S = RingPresentation(F, ['x'], ['x^3'])
    resM = minimal_resolution(ModulePresentation.residue_field(S), 4)
    resN = minimal_resolution(resM.syzygy_module(1), 3)
    assert check_summand_inclusion(resM, resN, 1, 1, 1)
    assert check_summand_inclusion(resM, resN, 1, 2, 1)
    with pytest.raises(ValueError):
        check_summand_inclusion(resM, resN, 1, 0, 1)


def test_judge_and_report():
    S = RingPresentation(F, ['x'], ['x^3'])
    res = minimal_resolution(ModulePresentation.residue_field(S), 4)
    from mintk.minors import minors_of_resolution
    verdicts = [minors_of_resolution(res, n, 1) for n in range(1, 5)]
    assert judge(verdicts, 1) == TheoremReport.FALSIFIED
    assert judge(verdicts[:1], 1) == TheoremReport.VERIFIED
    assert judge(verdicts, 5) == TheoremReport.INCONCLUSIVE

    report = TheoremReport('alternation', 'k over k[x]/(x^3)', {1: 1}, {1: verdicts})
    assert report.status == TheoremReport.FALSIFIED
    assert report.onset(1) is None
    records = report.records('t')
    assert len(records) == 5
    assert records[-1]['summary'] == 'falsified'
    assert records[0]['task'] == 't'
    assert report.lines()[-1] == 'status: falsified'

    report = TheoremReport('first step', 'k', {1: 1}, {1: verdicts[:1]})
    assert report.status == TheoremReport.VERIFIED
    report.downgrade(TheoremReport.INCONCLUSIVE, 'growth check skipped')
    assert report.status == TheoremReport.INCONCLUSIVE
    assert report.notes == ['growth check skipped']
    report.downgrade(TheoremReport.VERIFIED)
    assert report.status == TheoremReport.INCONCLUSIVE
