#!/usr/bin/env python3

import os
from random import Random

import pytest
from hypothesis import given, settings

from mintk.arith import PrimeField
from mintk.ring import RingPresentation, GradedIdeal
from mintk.resolution import GradedMatrix, ModulePresentation, minimal_resolution
from mintk.minors import check_minors_in_mr, minors_of_resolution, minimal_matrices
from mintk.stretched import build_stretched
from mintk.scenario import property_suite, counterexample, independent_columns, parse_expectation, \
    match_expectation

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(101)
R = RingPresentation(F, ['x', 'y'], ['x*y'])


@settings(deadline=None)
@given(minimal_matrices(R, 3, 3))
def test_minimal_matrices(A):
    assert A.nrows <= 3 and A.ncols <= 3
    assert A.is_minimal()
    assert check_minors_in_mr(A, 1)


@given(minimal_matrices(R, 3, 3, inject_unit=True))
def test_unit_matrices(A):
    assert A.entry(0, 0) == R.one()
    assert not A.is_minimal()


def test_counterexample():
    found = counterexample(minimal_matrices(R, 3, 3, inject_unit=True), lambda A: check_minors_in_mr(A, 1), 20,
                           Random(0))
    assert found.shape == (1, 1)
    assert found.entry(0, 0) == R.one()
    assert counterexample(minimal_matrices(R, 2, 2), lambda A: check_minors_in_mr(A, 1), 20, Random(0)) is None


def test_independent_columns():
    G = build_stretched(F, 3)
    A = GradedMatrix.from_rows(G, [['-25*x3', '-41*x3', '11*x3 + 50*x1']], [0], [1, 1, 1])
    assert not independent_columns(A)
    B = GradedMatrix.from_rows(G, [['x3', 'x2', 'x1']], [0], [1, 1, 1])
    assert independent_columns(B)


def test_suites():
    report = property_suite(1, 2, cases=50, suites=['tensor_submatrix'])
    assert report.passed
    assert report.cases == {'tensor_submatrix': 50}
    assert report.lines()[1].split() == ['tensor_submatrix', '50', 'cases,', '0', 'failed']

    report = property_suite(1, 3, cases=10, suites=['minors_in_mr', 'basis_change'])
    assert report.passed

    report = property_suite(1, 2, cases=100, suites=['annihilated_generator'])
    assert report.passed


def test_injected_unit():
    report = property_suite(2, 3, cases=5, inject_unit=True, suites=['minors_in_mr'])
    assert report.failed_suites() == ['minors_in_mr']
    assert len(report.failures) == 1
    failure = report.failures[0]
    assert 'of degree 0 < 1' in failure.detail
    assert 'rows = [[1]]' in failure.reproducer
    assert failure.reproducer.splitlines()[-1] == 'task t = minors_in_mr { module = A, r = 1 }'
    assert 'unit entry injected' in report.lines()[0]
    assert report.lines()[2].startswith('  FAIL minors_in_mr: ')

    again = property_suite(2, 3, cases=5, inject_unit=True, suites=['minors_in_mr'])
    assert [f.reproducer for f in again.failures] == [f.reproducer for f in report.failures]


def test_suite_arguments():
    with pytest.raises(ValueError):
        property_suite(1, 5)
    with pytest.raises(ValueError):
        property_suite(1, 0)
    with pytest.raises(ValueError):
        property_suite(1, 2, suites=['associativity'])


def test_expectations():
    C = RingPresentation(F, ['x'], ['x^3'])
    assert parse_expectation(C, 'm') is None
    assert parse_expectation(C, 'm^2') is None
    assert parse_expectation(C, '0').is_zero()
    ideal = parse_expectation(R, '(x, y^2)')
    assert isinstance(ideal, GradedIdeal)
    assert len(ideal.generators) == 2

    res = minimal_resolution(ModulePresentation.residue_field(C), 2)
    v1, v2 = [minors_of_resolution(res, n, 1) for n in (1, 2)]
    assert match_expectation(v1, 'm') == 'verified'
    assert match_expectation(v1, '(x)') == 'verified'
    assert match_expectation(v1, '(x^2)') == 'falsified'
    assert match_expectation(v2, '(x^2)') == 'verified'
    assert match_expectation(v2, ' (x^2) ') == 'verified'
    assert match_expectation(v2, 'm') == 'falsified'
    assert match_expectation(v2, '0') == 'falsified'
