#!/usr/bin/env python3

import os

import pytest

from mintk.arith import PrimeField
from mintk.ring import RingPresentation
from mintk.resolution import ModulePresentation, GradedMatrix, GradedFreeModule, minimal_resolution, \
    betti_growth_check, dual_presentation, syzygy_step, minimalize
from mintk.stretched import build_stretched
from mintk.errors import CapTooLowError, NotArtinianError, RankMismatchError, NonHomogeneousError

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)


def test_residue_over_cubic():
    R = RingPresentation(F, ['x'], ['x^3'])
    res = minimal_resolution(ModulePresentation.residue_field(R), 5)
    assert res.betti == [1] * 6
    assert all(res.certified(n) for n in range(6))
    assert res.is_minimal()
    res.check_complex()
    assert [R.format(res.differential(n).entry(0, 0)) for n in range(1, 6)] == ['x', 'x^2', 'x', 'x^2', 'x']
    assert [list(res.free(n).degrees) for n in range(4)] == [[0], [1], [3], [4]]
    assert res.certificate_text(3) == 'certified'

    table = res.betti_table()
    assert table.loc[0, 0] == 1
    assert table.loc[0, 1] == 1
    assert table.loc[1, 2] == 1
    assert table.loc[1, 3] == 1


def test_residue_over_stretched():
    R = build_stretched(F, 3)
    res = minimal_resolution(ModulePresentation.residue_field(R), 6)
    assert res.betti == [1, 3, 8, 21, 55, 144, 377]
    report = betti_growth_check(res)
    assert report.factor == 2
    assert report.passed
    assert not report.skipped


def test_koszul():
    R = RingPresentation(F, ['x', 'y'])
    res = minimal_resolution(ModulePresentation.residue_field(R), 4)
    assert res.betti == [1, 2, 1]
    assert res.terminated
    assert res.graded_betti(2) == {2: 1}
    with pytest.raises(NotArtinianError):
        betti_growth_check(res)


def test_cap_too_low():
    R = RingPresentation(F, ['x'], ['x^3'])
    k = ModulePresentation.residue_field(R)
    with pytest.raises(CapTooLowError) as e:
        minimal_resolution(k, 3, degree_cap=1, require_certified=True)
    assert e.value.suggested_cap == 3
    with pytest.raises(CapTooLowError):
        minimal_resolution(k, 3, degree_cap=0)

    res = minimal_resolution(k, 3, degree_cap=2)
    assert not res.certified(2)
    assert res.certificate_text(2) == 'up to degree 2'


def test_syzygy_and_dual():
    R = RingPresentation(F, ['x'], ['x^3'])
    res = minimal_resolution(ModulePresentation.residue_field(R), 3)
    omega = res.syzygy_module(1)
    assert omega.mu == 1
    assert minimal_resolution(omega, 2).betti == [1, 1, 1]
    with pytest.raises(ValueError):
        res.syzygy_module(3)

    dual = dual_presentation(ModulePresentation.residue_field(R))
    assert dual.mu == 1
    assert dual.grading_shift == 1
    with pytest.raises(NotArtinianError):
        dual_presentation(ModulePresentation.residue_field(RingPresentation(F, ['x', 'y'], ['x*y'])))


def test_presentations():
    R = RingPresentation(F, ['x', 'y'], ['x^2', 'y^2'])
    M = ModulePresentation.from_rows(R, [['x', 'y', '0'], ['0', 'x', 'y']], [0, 0])
    assert M.mu == 2
    assert list(M.relations.degrees) == [1, 1, 1]
    assert ModulePresentation.cyclic(R, ['x', 'y', 'x + y']).name == 'R/(x, y)'
    assert ModulePresentation.from_ideal(R, ['x']).mu == 1
    S = M.direct_sum(ModulePresentation.residue_field(R))
    assert S.mu == 3
    assert S.hilbert_function(0) == 3

    with pytest.raises(RankMismatchError):
        GradedMatrix.from_rows(R, [['x', 'y'], ['x']], [0, 0])
    with pytest.raises(RankMismatchError):
        GradedMatrix.from_rows(R, [['0']], [0])
    with pytest.raises(NonHomogeneousError):
        GradedMatrix.from_rows(R, [['x', 'x*y']], [0], [1, 1])


def test_syzygy_step():
    S = RingPresentation(F, ['x', 'y'])
    x, y = S.variable('x'), S.variable('y')
    A = GradedMatrix(GradedFreeModule(S, [1, 1]), GradedFreeModule(S, [0]), {(0, 0): x, (0, 1): y})
    B = syzygy_step(A, 3)
    assert B.shape == (2, 1)
    assert list(B.source.degrees) == [2]
    assert A.compose(B).is_zero()
    assert B.is_minimal()
    with pytest.raises(CapTooLowError):
        syzygy_step(A, 0)


def test_minimalize():
    S = RingPresentation(F, ['x', 'y'])
    x, y = S.variable('x'), S.variable('y')
    A = GradedMatrix(GradedFreeModule(S, [0, 1]), GradedFreeModule(S, [0, 0]),
                     {(0, 0): S.one(), (0, 1): x, (1, 1): y}, normalize=False)
    assert not A.is_minimal()
    A_min = minimalize(A)
    assert A_min.shape == (1, 1)
    assert S.format(A_min.entry(0, 0)) == 'y'
    assert A_min.is_minimal()
