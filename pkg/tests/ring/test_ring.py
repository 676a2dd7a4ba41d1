#!/usr/bin/env python3

import os
import math

import pytest

from mintk.arith import PrimeField, RationalField
from mintk.ring import RingPresentation, buchberger, reduce
from mintk.errors import NonHomogeneousError, ArityMismatchError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)


def test_presentation():
    R = RingPresentation(F, ['x', 'y'], ['x^2', 'y^2'])
    assert str(R) == 'k[x, y]/(x^2, y^2)'
    assert R.embdim == 2
    assert R.is_artinian
    assert R.artinian_top == 2
    assert R.length == 4
    assert R.hilbert_series(3) == [1, 2, 1, 0]
    assert R.format(R.polynomial('x*y + x^2')) == 'x*y'
    assert R.polynomial('x^2*y').is_zero()

    S = RingPresentation(F, ['x', 'y'], ['x*y'])
    assert not S.is_artinian
    assert S.artinian_top == math.inf
    assert S.length == math.inf
    assert S.hilbert_series(4) == [1, 2, 2, 2, 2]
    assert str(RingPresentation(F, ['t'])) == 'k[t]'


def test_normal_form():
    R = RingPresentation(RationalField(), ['x', 'y'], ['x^2 - y^2'])
    assert R.polynomial('x^2') == R.polynomial('y^2')
    assert R.format(R.polynomial('x^3')) == 'x*y^2'
    f = R.polynomial('x^2*y + 3*x*y')
    assert R.normal_form(f) == f
    with pytest.raises(ArityMismatchError):
        R.normal_form(RingPresentation(RationalField(), ['x']).variable('x'))


def test_hilbert_by_rank():
    R = RingPresentation(F, ['x', 'y', 'z'], ['x^2 - y*z', 'y^2 - x*z', 'z^2 - x*y'])
    for d in range(6):
        assert R.hilbert_function(d) == R.hilbert_function_by_rank(d)


def test_invalid_presentations():
    with pytest.raises(ValueError):
        RingPresentation(F, ['x', 'x'])
    with pytest.raises(ValueError):
        RingPresentation(F, ['1x'])
    with pytest.raises(ValueError):
        RingPresentation(F, ['x', 'y'], ['x'])
    with pytest.raises(NonHomogeneousError):
        RingPresentation(F, ['x', 'y'], ['x^2 + y^3'])


def test_groebner():
    R = RingPresentation(F, ['x', 'y'])
    G = buchberger([R.polynomial('x^2 - y^2'), R.polynomial('x*y')])
    assert reduce(R.polynomial('y^3'), G).is_zero()
    assert not reduce(R.polynomial('y^2'), G).is_zero()
    assert all(g.lead_coefficient == 1 for g in G)
    with pytest.raises(NonHomogeneousError):
        buchberger([R.polynomial('x + y^2')])
