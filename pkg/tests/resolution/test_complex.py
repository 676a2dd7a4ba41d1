#!/usr/bin/env python3

import os

import pytest

from mintk.arith import PrimeField
from mintk.ring import RingPresentation
from mintk.resolution import ModulePresentation, GradedMatrix, minimal_resolution, verify_exactness, check_complex
from mintk.errors import NotAComplexError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)
R = RingPresentation(F, ['x'], ['x^3'])


def test_resolution_is_exact():
    S = RingPresentation(F, ['x', 'y'], ['x^2', 'x*y', 'y^3'])
    res = minimal_resolution(ModulePresentation.residue_field(S), 4)
    report = verify_exactness(res.differentials, 6)
    assert report.is_exact
    assert report.nonzero() == []
    assert report.lines() == ['exact at every interior position through degree 6']


def test_homology_witness():
    d1 = GradedMatrix.from_rows(R, [['x^2']], [0])
    d2 = GradedMatrix.from_rows(R, [['x^2']], [2])
    report = verify_exactness([d1, d2], 6)
    assert not report.is_exact
    assert report.nonzero() == [(1, 3, 1)]
    assert report.dimension(1, 3) == 1
    assert report.witness[:2] == (1, 3)


def test_not_a_complex():
    d1 = GradedMatrix.from_rows(R, [['x']], [0])
    d2 = GradedMatrix.from_rows(R, [['x']], [1])
    with pytest.raises(NotAComplexError) as e:
        check_complex([d1, d2])
    assert e.value.position == 1
    assert e.value.entry == (0, 0)
    with pytest.raises(NotAComplexError):
        verify_exactness([d1, d2], 4)
