#!/usr/bin/env python3

import os

import pytest

from mintk.arith import PrimeField, RationalField
from mintk.ring import RingPresentation
from mintk.resolution import GradedMatrix, ModulePresentation, minimal_resolution
from mintk.stretched import build_stretched, StretchedGorensteinRing, find_annihilated_generator, residue_matrix
from mintk.errors import NonHomogeneousError, InvalidUnitError, CharTwoError, HypothesisViolatedError, \
    NotMinimalError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)


def test_stretched_ring():
    R = build_stretched(F, 3)
    assert isinstance(R, StretchedGorensteinRing)
    assert R.variables == ('x3', 'x2', 'x1')
    assert R.hilbert_series(3) == [1, 3, 1, 0]
    assert R.length == R.expected_length == 5
    assert R.format(R.socle_generator) == 'x1^2'
    assert R.polynomial('x2^2') == R.polynomial('x1^2')
    assert R.polynomial('x1*x3').is_zero()
    assert R.index(1) == 2
    assert R.unit(1) == 1

    R = build_stretched(RationalField(), 4, units=[1, 2, 3])
    assert R.hilbert_series(3) == [1, 4, 1, 0]
    assert R.polynomial('2*x3^2') == R.polynomial('x1^2')
    with pytest.raises(ValueError):
        R.index(5)


def test_invalid_parameters():
    with pytest.raises(NonHomogeneousError):
        build_stretched(F, 3, s=3)
    with pytest.raises(ValueError):
        build_stretched(F, 1)
    with pytest.raises(ValueError):
        build_stretched(F, 3, s=1)
    with pytest.raises(ValueError):
        build_stretched(F, 3, units=[1])
    with pytest.raises(InvalidUnitError):
        build_stretched(F, 3, units=[1, 0])
    with pytest.raises(CharTwoError):
        build_stretched(2, 3)


def test_annihilated_generator():
    R = build_stretched(F, 3)
    res = minimal_resolution(ModulePresentation.residue_field(R), 3)
    A = res.differential(2)
    assert A.shape == (3, 8)
    A_new, j = find_annihilated_generator(A, R)
    assert j == A.ncols - 1
    assert A_new.shape == A.shape
    assert sorted(A_new.source.degrees) == sorted(A.source.degrees)
    x3 = R.x(3)
    assert A_new.column(j)
    assert all(R.mul(x3, p).is_zero() for p in A_new.column(j).values())
    assert residue_matrix(A, R, [0, 1]).shape == (3, 2)


def test_annihilated_generator_errors():
    R = build_stretched(F, 3)
    with pytest.raises(HypothesisViolatedError):
        find_annihilated_generator(GradedMatrix.from_rows(R, [['x1']], [0]), R)
    with pytest.raises(NotMinimalError):
        find_annihilated_generator(GradedMatrix.from_rows(R, [['1', 'x1']], [0], [0, 1]), R)
    # the first two columns are proportional over k
    G = build_stretched(PrimeField(101), 3)
    dependent = GradedMatrix.from_rows(G, [['-25*x3', '-41*x3', '11*x3 + 50*x1']], [0], [1, 1, 1])
    with pytest.raises(NotMinimalError):
        find_annihilated_generator(dependent, G)
    with pytest.raises(NotMinimalError):
        find_annihilated_generator(GradedMatrix.from_rows(R, [['x3', '2*x3']], [0], [1, 1]), R)
    plain = RingPresentation(F, ['x', 'y'], ['x^2', 'y^2'])
    with pytest.raises(HypothesisViolatedError):
        find_annihilated_generator(GradedMatrix.from_rows(plain, [['x', 'y']], [0]), plain)
