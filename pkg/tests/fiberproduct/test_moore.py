#!/usr/bin/env python3

import os

import pytest

from mintk.arith import PrimeField
from mintk.ring import RingPresentation, GradedIdeal
from mintk.resolution import ModulePresentation, minimal_resolution
from mintk.minors import MinorVerdict, minors_of_resolution
from mintk.fiberproduct import fiber_product, moore_resolution, compare_with_direct, verify_theorem_fp, \
    theorem_bound, periodicity_onset, tensor_degrees, word_text
from mintk.errors import DepthTooLowError, HypothesisViolatedError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)
S = RingPresentation(F, ['x', 'y'])
T = RingPresentation(F, ['z'])
R = fiber_product(S, T)


def test_tensor_degrees():
    assert tensor_degrees([(0, 1), (0, 2)]) == [0, 1, 2, 3]
    assert tensor_degrees([]) == [0]
    assert word_text((1, ((1, 2),), 0)) == 'F1 (E1 F2) P0'
    assert word_text((0, (), 3)) == 'P3'


def test_moore_residue():
    kS = ModulePresentation.residue_field(S)
    moore = moore_resolution(kS, R, 5)
    assert moore.block_audit() == []
    direct = minimal_resolution(ModulePresentation.residue_field(R), 5)
    rows = compare_with_direct(moore, direct)
    assert [row['moore'] for row in rows] == [row['direct'] for row in rows]
    assert all(row['graded'] for row in rows)
    moore.check_complex()
    for n in range(2, 6):
        blocks = moore.focus_blocks(n)
        assert blocks
        assert all(b.literal for b in blocks)
        assert all('NOT LITERAL' not in b.format() for b in blocks)
    with pytest.raises(ValueError):
        moore.focus_blocks(6)


def test_moore_cyclic():
    Q = ModulePresentation.cyclic(S, ['x'])
    moore = moore_resolution(Q, R, 4)
    assert moore.block_audit() == []
    # z acts as zero on S/(x), so over R it is R/(x, z)
    Q_R = ModulePresentation.cyclic(R, ['x', 'z'])
    direct = minimal_resolution(Q_R, 4)
    assert direct.betti == [1, 2, 3, 5, 8]
    assert moore.betti == direct.betti


def test_moore_errors():
    kS = ModulePresentation.residue_field(S)
    short = minimal_resolution(ModulePresentation.residue_field(T), 1)
    assert not short.terminated
    with pytest.raises(DepthTooLowError):
        moore_resolution(kS, R, 4, F=short)
    with pytest.raises(ValueError):
        moore_resolution(ModulePresentation.residue_field(R), R, 3)


def test_bound():
    assert theorem_bound(R, 1) == 9
    assert theorem_bound(R, 2) == 10
    assert theorem_bound(fiber_product(RingPresentation(F, ['u']), RingPresentation(F, ['v'])), 1) == 10


def test_periodicity_onset():
    ring = RingPresentation(F, ['x'], ['x^3'])
    res = minimal_resolution(ModulePresentation.residue_field(ring), 6)
    verdicts = [minors_of_resolution(res, n, 1) for n in range(1, 7)]
    assert periodicity_onset(verdicts) == 1
    zero = GradedIdeal.zero(ring)
    broken = [MinorVerdict(1, 1, zero, MinorVerdict.PROPER, True, exhaustive=False),
              MinorVerdict(2, 1, zero, MinorVerdict.EQUAL, True),
              MinorVerdict(3, 1, zero, MinorVerdict.PROPER, True, exhaustive=False),
              MinorVerdict(4, 1, zero, MinorVerdict.EQUAL, True)]
    assert periodicity_onset(broken) == 2


def test_hypotheses():
    R2 = fiber_product(RingPresentation(F, ['u']), RingPresentation(F, ['v']))
    Q = ModulePresentation.cyclic(R2, ['u'])
    with pytest.raises(HypothesisViolatedError):
        verify_theorem_fp(R2, Q, 1, n_range=[1, 2])
    report = verify_theorem_fp(R2, Q, 1, n_range=[1, 2, 3], observe=True)
    assert report.status == 'inconclusive'
    assert [v.ideal.format() for v in report.verdicts[1]] == ['(u)', '(v)', '(u)']
    with pytest.raises(ValueError):
        verify_theorem_fp(R2, ModulePresentation.cyclic(RingPresentation(F, ['u']), ['u']), 1)
    with pytest.raises(ValueError):
        verify_theorem_fp(R2, Q, 0)


def test_residue_field_theorem():
    k = ModulePresentation.residue_field(R)
    report = verify_theorem_fp(R, k, 1, n_range=range(1, 11))
    assert report.status == 'verified'
    assert report.bound == {1: 9}
    assert all(v.is_equal for v in report.verdicts[1] if v.n >= 9)
    assert report.data['betti'][:3] == [1, 3, 5]
