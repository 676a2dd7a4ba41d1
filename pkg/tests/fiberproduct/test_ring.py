#!/usr/bin/env python3

import os

import pytest

from mintk.arith import PrimeField, RationalField
from mintk.ring import RingPresentation
from mintk.resolution import ModulePresentation, GradedMatrix, minimal_resolution, verify_exactness
from mintk.fiberproduct import fiber_product, lift_complex
from mintk.errors import NameClashError, FieldMismatchError, NotMinimalError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)


def test_fiber_product():
    S = RingPresentation(F, ['x', 'y'])
    T = RingPresentation(F, ['z'])
    R = fiber_product(S, T)
    assert R.left is S
    assert R.right is T
    assert R.e1 == 2
    assert R.e2 == 1
    assert R.variables == ('x', 'y', 'z')
    assert R.hilbert_series(4) == [1, 3, 4, 5, 6]
    assert R.polynomial('x*z + y*z').is_zero()
    assert R.side('right') is T
    assert R.lift_polynomial(T.polynomial('z^2'), 'right') == R.polynomial('z^2')
    with pytest.raises(ValueError):
        R.side('middle')


def test_artinian_factors():
    S = RingPresentation(F, ['x'], ['x^3'])
    T = RingPresentation(F, ['y'], ['y^2'])
    R = fiber_product(S, T)
    assert R.hilbert_series(3) == [1, 2, 1, 0]
    assert R.length == 4


def test_invalid_factors():
    S = RingPresentation(F, ['x'])
    with pytest.raises(NameClashError):
        fiber_product(S, RingPresentation(F, ['x']))
    with pytest.raises(FieldMismatchError):
        fiber_product(S, RingPresentation(RationalField(), ['y']))
    with pytest.raises(ValueError):
        fiber_product(S, RingPresentation(F, []))


def test_lifted_koszul_not_acyclic():
    S = RingPresentation(F, ['x', 'y'])
    R = fiber_product(S, RingPresentation(F, ['z']))
    koszul = minimal_resolution(ModulePresentation.residue_field(S), 2)
    lifted = lift_complex(koszul, R, 'left')
    assert [d.ring for d in lifted] == [R, R]
    assert lifted[1].target is lifted[0].source
    report = verify_exactness(lifted, 4, positions=[1])
    assert not report.is_exact
    assert report.nonzero()[0][:2] == (1, 2)
    assert report.dimension(1, 2) == 2


def test_lift_errors():
    S = RingPresentation(F, ['x'])
    T = RingPresentation(F, ['y'])
    R = fiber_product(S, T)
    unit = GradedMatrix.from_rows(S, [['1', 'x']], [0], [0, 1])
    with pytest.raises(NotMinimalError):
        lift_complex([unit], R)
    with pytest.raises(ValueError):
        lift_complex([GradedMatrix.from_rows(T, [['y']], [0])], R, 'left')
