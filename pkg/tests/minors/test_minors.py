#!/usr/bin/env python3

import os

import pytest

from mintk.arith import PrimeField
from mintk.ring import RingPresentation, GradedIdeal, max_ideal_power, ideal_compare, IdealComparison
from mintk.resolution import GradedMatrix, ModulePresentation, minimal_resolution
from mintk.minors import MinorExpansion, minors_ideal, all_minors, minor_count, product_ideal, \
    MinorVerdict, minors_of_resolution, minors_onset, verdict_table

cwd = os.path.dirname(os.path.abspath(__file__))

F = PrimeField(32003)


def test_determinant():
    R = RingPresentation(F, ['x', 'y'])
    A = GradedMatrix.from_rows(R, [['x', 'y'], ['y', 'x']], [0, 0])
    exp = MinorExpansion(A)
    assert R.format(exp.determinant([0, 1], [0, 1])) == 'x^2 - y^2'
    assert exp.determinant([], []) == R.one()
    with pytest.raises(ValueError):
        exp.determinant([0], [0, 1])


def test_minors_ideal():
    R = RingPresentation(F, ['x', 'y'])
    A = GradedMatrix.from_rows(R, [['x', 'y', '0'], ['0', 'x', 'y']], [0, 0])
    assert minor_count(A, 2) == 3
    assert len(list(all_minors(A, 2))) == 3
    result = minors_ideal(A, 2)
    assert result.exhaustive
    assert result.saturated
    assert ideal_compare(result.ideal, max_ideal_power(R, 2)).relation == IdealComparison.EQUAL
    assert minors_ideal(A, 3).ideal.is_zero()
    assert minors_ideal(A, 0).ideal.is_unit()
    assert minors_ideal(A, 1).ideal.format() == '(x, y)'
    with pytest.raises(ValueError):
        minors_ideal(A, -1)


def test_degree_span_search():
    R = RingPresentation(F, ['x', 'y'])
    A = GradedMatrix.from_rows(R, [['x', 'y', '0'], ['0', 'x', 'y']], [0, 0])
    result = minors_ideal(A, 2, max_minors=2)
    assert not result.exhaustive
    assert not result.degree_complete
    assert not result.saturated
    assert result.examined == 2
    assert result.degree_span.rank == 2


def test_product_ideal():
    R = RingPresentation(F, ['x', 'y'])
    I = GradedIdeal(R, ['x'])
    J = GradedIdeal(R, ['x', 'y'])
    assert product_ideal(R, [I, J]).format() == '(x^2, x*y)'
    assert product_ideal(R, []).is_unit()


def test_verdicts_over_cubic():
    R = RingPresentation(F, ['x'], ['x^3'])
    res = minimal_resolution(ModulePresentation.residue_field(R), 6)
    verdicts = [minors_of_resolution(res, n, 1) for n in range(1, 7)]
    assert [v.relation for v in verdicts] == [MinorVerdict.EQUAL, MinorVerdict.PROPER] * 3
    assert [v.ideal.format() for v in verdicts] == ['(x)', '(x^2)'] * 3
    assert verdicts[0].format() == 'I(n=1, r=1) = m [certified]'
    assert verdicts[1].format() == 'I(n=2, r=1) = (x^2) ⊊ m [certified]'
    assert verdicts[1].to_record() == {'n': 2, 'r': 1, 'verdict': 'proper', 'ideal': '(x^2)', 'certified': True,
                                       'witness': 'x'}
    assert minors_onset(verdicts) is None

    zero = minors_of_resolution(res, 1, 2)
    assert zero.relation == MinorVerdict.ZERO
    assert zero.format() == 'I(n=1, r=2) = 0 ⊊ m^2 [certified]'
    assert minors_of_resolution(res, 1, 3).is_equal

    with pytest.raises(ValueError):
        minors_of_resolution(res, 7, 1)
    with pytest.raises(ValueError):
        minors_of_resolution(res, 1, 0)

    table = verdict_table(verdicts)
    assert table.loc[(2, 1), 'verdict'] == 'proper'
    assert list(table.columns) == ['verdict', 'ideal', 'certified', 'witness']


def test_terminated_steps():
    R = RingPresentation(F, ['x', 'y'])
    res = minimal_resolution(ModulePresentation.residue_field(R), 5)
    assert res.terminated
    v = minors_of_resolution(res, 4, 1)
    assert v.relation == MinorVerdict.ZERO
    assert v.witness == R.variable('x')


def test_onset():
    R = RingPresentation(F, ['x'], ['x^3'])
    ideal = GradedIdeal.zero(R)
    verdicts = [MinorVerdict(n, 1, ideal, rel, True) for n, rel in
                [(1, MinorVerdict.PROPER), (2, MinorVerdict.EQUAL), (3, MinorVerdict.PROPER),
                 (4, MinorVerdict.EQUAL), (5, MinorVerdict.EQUAL)]]
    assert minors_onset(verdicts) == 4
    assert MinorVerdict(3, 2, ideal, MinorVerdict.PROPER, False, complete_through=5).format() == \
           'I(n=3, r=2) = 0 ⊊ m^2 [up to degree 5]'
