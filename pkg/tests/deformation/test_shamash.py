#!/usr/bin/env python3

import os

import pytest

from mintk.arith import PrimeField
from mintk.ring import RingPresentation
from mintk.resolution import ModulePresentation, minimal_resolution
from mintk.stretched import build_stretched
from mintk.deformation import adjoin_variable, from_total, lift_and_divide, shamash_converse, compare_with_direct, \
    verify_theorem_lift, lift_threshold
from mintk.minors import GRADED_NOTE
from mintk.errors import HypothesisViolatedError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)
B = RingPresentation(F, ['x', 'y'], ['x*y'])
BW = adjoin_variable(B, 'w')


def test_mapping_cone():
    Q = ModulePresentation.cyclic(B, ['x'])
    res = minimal_resolution(Q, 6)
    assert res.betti == [1] * 7
    G = shamash_converse(res, BW)
    assert G.betti == [1, 2, 2, 2, 2, 2, 2]
    assert G.sigma.is_zero
    assert G.rank_problems() == []
    assert G.exactness.is_exact
    G.check_complex()
    rows = compare_with_direct(G, BW, Q, 3)
    assert [row['assembled'] for row in rows] == [row['direct'] for row in rows]
    assert all(row['graded'] for row in rows)


def test_nonzero_sigma():
    pair = from_total(RingPresentation(F, ['x', 'w'], ['x^2 - w^2']), 'w')
    k = ModulePresentation.residue_field(pair.base)
    res = minimal_resolution(k, 5)
    lifted, sigma = lift_and_divide(res, pair)
    assert len(lifted) == 5
    assert sigma.nonzero_steps() == [2, 3, 4, 5]
    assert pair.total.format(sigma[2].entry(0, 0)) == 'w'
    assert sigma.commutation_problems(lifted) == []
    G = shamash_converse(res, pair)
    assert G.betti == [1, 2, 2, 2, 2, 2]
    assert G.is_minimal()
    # sigma enters with the sign of the w block
    G.check_complex()


def test_wrong_ring():
    res = minimal_resolution(ModulePresentation.residue_field(RingPresentation(F, ['x'], ['x^2'])), 2)
    with pytest.raises(ValueError):
        lift_and_divide(res, BW)


def test_lift_threshold():
    assert lift_threshold({1: 3, 2: 5}, 4, 2) == 5
    assert lift_threshold({1: 3, 2: None}, 4, 2) is None
    assert lift_threshold({1: 3}, None, 1) is None
    assert lift_threshold({1: 1}, 0, 1) == 1


def test_lifting_theorem():
    G = build_stretched(F, 3)
    pair = adjoin_variable(G, 'w')
    k = ModulePresentation.residue_field(G)
    report = verify_theorem_lift(pair, k, 1, n_range=range(1, 5), direct_steps=2)
    assert report.status == 'verified'
    assert report.bound[1] <= 4
    assert report.data['sigma_nonzero'] == []
    assert report.data['sigma_commutes']
    assert report.data['layers_missing'] == []
    assert report.data['base_betti'] == [1, 3, 8, 21, 55]
    assert GRADED_NOTE in report.notes


def test_lifting_hypotheses():
    free = ModulePresentation.free(B, [0])
    with pytest.raises(HypothesisViolatedError):
        verify_theorem_lift(BW, free, 1, n_range=[1, 2])
    with pytest.raises(ValueError):
        verify_theorem_lift(BW, ModulePresentation.residue_field(BW.total), 1)
    with pytest.raises(ValueError):
        verify_theorem_lift(BW, ModulePresentation.residue_field(B), 0)
