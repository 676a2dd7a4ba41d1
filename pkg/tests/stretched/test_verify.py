#!/usr/bin/env python3

import os

import pytest

from mintk.arith import PrimeField
from mintk.ring import RingPresentation
from mintk.resolution import ModulePresentation, minimal_resolution
from mintk.stretched import build_stretched, annihilated_seed, tracked_resolution, verify_theorem_sg, \
    theorem_bound, socle_witness, designation_text
from mintk.errors import HypothesisViolatedError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)
G = build_stretched(F, 3)


def test_theorem_bound():
    assert theorem_bound(1, 1) == 5
    assert theorem_bound(1, 2) == 6
    assert theorem_bound(2, 4) == 9


def test_tracked_single_start():
    res = minimal_resolution(ModulePresentation.residue_field(G), 4)
    k, B, g = annihilated_seed(res, G)
    assert k == 2
    tracked = tracked_resolution(B, g, 3)
    assert tracked.counts() == [(1, 0), (0, 1), (2, 0), (0, 2)]
    assert tracked.evolution_problems() == []
    assert tracked.bound_problems() == []
    assert tracked.x1_block(1) == 1
    assert tracked.resolution.length == 3
    tracked.resolution.check_complex()
    assert list(tracked.table().columns) == ['gamma', 'delta', 'x1_block', 'beta']
    assert tracked.lines()[0].startswith('tracked resolution (single start)')


def test_tracked_pair_start():
    res = minimal_resolution(ModulePresentation.residue_field(G), 4)
    k, B, g = annihilated_seed(res, G)
    tracked = tracked_resolution(B, g, 3, pair_start=True)
    assert tracked.counts() == [(1, 0), (1, 1), (2, 1), (2, 2)]
    assert tracked.bound_problems() == []


def test_tracking_hypotheses():
    plain = RingPresentation(F, ['x', 'y'], ['x^2', 'y^2'])
    k = ModulePresentation.residue_field(plain)
    with pytest.raises(HypothesisViolatedError):
        tracked_resolution(k, 0, 2)
    with pytest.raises(HypothesisViolatedError):
        tracked_resolution(ModulePresentation.residue_field(build_stretched(F, 2)), 0, 2)
    res = minimal_resolution(ModulePresentation.residue_field(G), 3)
    _, B, g = annihilated_seed(res, G)
    with pytest.raises(ValueError):
        tracked_resolution(B, g, 0)
    with pytest.raises(ValueError):
        tracked_resolution(B, B.nrows, 2)
    assert designation_text((1, 0)) == 'x1*w1'


def test_theorem_on_residue_field():
    k = ModulePresentation.residue_field(G)
    report = verify_theorem_sg(G, k, 1, n_range=range(1, 7))
    assert report.status == 'verified'
    assert report.bound == {1: 5}
    assert report.data['growth_factor'] == 2
    assert report.data['betti'] == [1, 3, 8, 21, 55, 144, 377]
    assert all(v.is_equal for v in report.verdicts[1] if v.n >= 5)


def test_theorem_hypotheses():
    plain = RingPresentation(F, ['x', 'y', 'z'], ['x^2', 'y^2', 'z^2'])
    k = ModulePresentation.residue_field(plain)
    with pytest.raises(HypothesisViolatedError):
        verify_theorem_sg(plain, k, 1, n_range=[1, 2])
    report = verify_theorem_sg(plain, k, 1, n_range=[1, 2], observe=True)
    assert report.status == 'inconclusive'
    with pytest.raises(ValueError):
        verify_theorem_sg(G, k, 1)
    with pytest.raises(ValueError):
        verify_theorem_sg(G, ModulePresentation.residue_field(G), 0)


def test_socle_witness():
    for n in (2, 3):
        witness = socle_witness(G, n)
        assert witness.passed
        assert witness.exactness.is_exact
        assert witness.verdict.relation == 'proper'
        assert witness.verdict.ideal.format() == '(x1^2)'
        assert witness.socle_equal
        assert witness.dual_mu == witness.ranks[0]
        assert witness.lines()[0].startswith('socle witness n = %i' % n)


def test_socle_witness_hypotheses():
    with pytest.raises(ValueError):
        socle_witness(G, 0)
    with pytest.raises(HypothesisViolatedError):
        socle_witness(RingPresentation(F, ['x', 'y'], ['x*y']), 2)
    with pytest.raises(HypothesisViolatedError):
        socle_witness(RingPresentation(F, ['x', 'y'], ['x^2', 'x*y', 'y^2']), 2)
