#!/usr/bin/env python3

import os

import pytest

from mintk.arith import PrimeField
from mintk.ring import RingPresentation
from mintk.resolution import ModulePresentation
from mintk.deformation import DeformationPair, adjoin_variable, from_total
from mintk.errors import NameClashError, HypothesisViolatedError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)


def test_adjoin_variable():
    B = RingPresentation(F, ['x', 'y'], ['x*y'])
    pair = adjoin_variable(B, 'w')
    assert pair.base is B
    assert pair.total.variables == ('x', 'y', 'w')
    assert pair.w_index == 2
    assert pair.total.format(pair.w) == 'w'
    assert pair.positions == [0, 1]
    with pytest.raises(NameClashError):
        adjoin_variable(B, 'x')


def test_from_total():
    total = RingPresentation(F, ['x', 'w'], ['x^2 - w^2'])
    pair = from_total(total, 'w')
    assert pair.base.variables == ('x',)
    assert str(pair.base) == 'k[x]/(x^2)'

    reordered = from_total(RingPresentation(F, ['w', 'x'], ['x^2 - w^2']), 'w')
    assert reordered.total.variables == ('x', 'w')
    assert reordered.base.hilbert_series(2) == [1, 1, 0]

    with pytest.raises(ValueError):
        from_total(total, 'z')
    with pytest.raises(HypothesisViolatedError):
        from_total(RingPresentation(F, ['x', 'w'], ['x*w']), 'w')


def test_pair_validation():
    B = RingPresentation(F, ['x'], ['x^2'])
    total = RingPresentation(F, ['x', 'w'], ['x^2'])
    assert DeformationPair(B, total, 'w').check_cap == 5
    with pytest.raises(ValueError):
        DeformationPair(B, total, 'x')
    with pytest.raises(ValueError):
        DeformationPair(RingPresentation(F, ['y'], ['y^2']), total, 'w')
    with pytest.raises(HypothesisViolatedError):
        DeformationPair(RingPresentation(F, ['x'], ['x^3']), total, 'w')


def test_lift_module():
    B = RingPresentation(F, ['x', 'y'], ['x*y'])
    pair = adjoin_variable(B, 'w')
    M = ModulePresentation.cyclic(B, ['x'])
    lifted = pair.lift_module(M)
    assert lifted.ring is pair.total
    assert lifted.matrix.shape == (1, 2)
    assert pair.total.format(lifted.matrix.entry(0, 1)) == 'w'
    A = pair.lift(M.matrix)
    assert A.ring is pair.total
    with pytest.raises(ValueError):
        pair.lift(lifted.matrix)
