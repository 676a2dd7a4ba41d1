#!/usr/bin/env python3

import os

import pytest

from mintk.arith import PrimeField
from mintk.ring import RingPresentation, GradedIdeal, IdealComparison, ideal_compare, max_ideal_power, socle
from mintk.errors import NonHomogeneousError, CapTooLowError, NotArtinianError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)


def test_minimal_generators():
    R = RingPresentation(F, ['x', 'y'], ['x*y'])
    I = GradedIdeal(R, ['x', 'y', 'x + y', 'x^2', '0'])
    assert len(I.minimal_generators()) == 2
    assert I.format() == '(x, y)'
    assert GradedIdeal.zero(R).format() == '0'
    assert GradedIdeal.unit(R).is_unit()
    assert GradedIdeal(R, ['2*x^2']).format() == '(x^2)'
    assert I.contains(R.polynomial('x^3 + y^5'))
    assert not GradedIdeal(R, ['x']).contains(R.polynomial('y'))
    assert GradedIdeal(R, ['x']).dimension(3) == 1


def test_split_generators():
    R = RingPresentation(F, ['x', 'y'], ['x*y'])
    with pytest.raises(NonHomogeneousError):
        GradedIdeal(R, ['x + y^2'])
    I = GradedIdeal(R, ['x + y^2'], split=True)
    assert I.format() == '(x, y^2)'


def test_compare():
    R = RingPresentation(F, ['x', 'y'], ['x*y'])
    m = max_ideal_power(R, 1)
    cmp = ideal_compare(GradedIdeal(R, ['x', 'y']), m)
    assert cmp.relation == IdealComparison.EQUAL

    cmp = ideal_compare(GradedIdeal(R, ['x^2']), GradedIdeal(R, ['x']))
    assert cmp.relation == IdealComparison.A_PROPER_IN_B
    assert cmp.witness_b == R.polynomial('x')
    assert cmp.witness_a is None

    cmp = ideal_compare(GradedIdeal(R, ['x']), GradedIdeal(R, ['y']))
    assert cmp.relation == IdealComparison.INCOMPARABLE

    with pytest.raises(CapTooLowError) as e:
        ideal_compare(GradedIdeal(R, ['x^2']), GradedIdeal(R, ['x']), up_to=1)
    assert e.value.suggested_cap == 2

    C = RingPresentation(F, ['x'], ['x^3'])
    with pytest.raises(CapTooLowError):
        ideal_compare(GradedIdeal(C, ['x^2']), GradedIdeal.zero(C), up_to=1)
    cmp = ideal_compare(GradedIdeal(C, ['x^2']), GradedIdeal.zero(C), up_to=2)
    assert cmp.relation == IdealComparison.B_PROPER_IN_A


def test_max_ideal_power():
    R = RingPresentation(F, ['x', 'y'], ['x^2', 'y^2'])
    assert max_ideal_power(R, 0).is_unit()
    assert max_ideal_power(R, 2).format() == '(x*y)'
    assert max_ideal_power(R, 3).is_zero()


def test_socle():
    R = RingPresentation(F, ['x', 'y'], ['x^2', 'y^2'])
    assert socle(R).format() == '(x*y)'
    assert socle(RingPresentation(F, ['x'], ['x^3'])).format() == '(x^2)'
    with pytest.raises(NotArtinianError):
        socle(RingPresentation(F, ['x', 'y'], ['x*y']))
