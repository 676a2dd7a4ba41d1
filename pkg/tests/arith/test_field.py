#!/usr/bin/env python3

import os
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mintk.arith import PrimeField, RationalField, FieldScalar, field_ops, make_field
from mintk.errors import InvalidScalarError, FieldMismatchError, CharTwoError

cwd = os.path.dirname(os.path.abspath(__file__))

F7 = PrimeField(7)
Q = RationalField()

small_ints = st.integers(min_value=-50, max_value=50)
fractions = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=20))


def test_make_field():
    assert make_field(0) == Q
    assert make_field(32003) == PrimeField(32003)
    assert make_field(7).characteristic == 7
    assert make_field(0).characteristic == 0
    with pytest.raises(CharTwoError):
        make_field(2)
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ValueError):
        PrimeField(2 ** 31 + 11)


def test_parse_and_format():
    assert F7.parse('3') == 3
    assert F7.parse('-1') == 6
    assert F7.parse('1/2') == 4
    assert F7.format(6) == '-1'
    assert F7.format(3) == '3'
    assert Q.parse('-3/4') == Fraction(-3, 4)
    assert Q.format(Fraction(-3, 4)) == '-3/4'
    for text in ['', 'x', '1/0', '2.5']:
        with pytest.raises(InvalidScalarError):
            Q.parse(text)
    with pytest.raises(InvalidScalarError):
        F7.parse('1/7')


def test_inverse_of_zero():
    with pytest.raises(InvalidScalarError):
        F7.inv(0)
    with pytest.raises(InvalidScalarError):
        Q.inv(Fraction(0))


def test_field_ops():
    a = FieldScalar(3, F7)
    b = FieldScalar(5, F7)
    assert field_ops(a, b, 'add').value == 1
    assert field_ops(a, b, 'mul').value == 1
    assert field_ops(a, None, 'inv').value == 5
    assert field_ops(a, None, 'neg').value == 4
    with pytest.raises(InvalidScalarError):
        field_ops(FieldScalar(0, F7), None, 'inv')
    with pytest.raises(FieldMismatchError):
        field_ops(a, FieldScalar(Fraction(1), Q), 'add')
    with pytest.raises(ValueError):
        field_ops(a, b, 'pow')


@given(small_ints, small_ints, small_ints)
def test_prime_field_laws(x, y, z):
    a, b, c = F7.from_int(x), F7.from_int(y), F7.from_int(z)
    assert F7.add(a, b) == F7.add(b, a)
    assert F7.mul(a, F7.mul(b, c)) == F7.mul(F7.mul(a, b), c)
    assert F7.mul(a, F7.add(b, c)) == F7.add(F7.mul(a, b), F7.mul(a, c))
    assert F7.add(a, F7.neg(a)) == 0
    if a != 0:
        assert F7.mul(a, F7.inv(a)) == 1


@given(fractions, fractions, fractions)
def test_rational_laws(a, b, c):
    assert Q.add(a, b) == Q.add(b, a)
    assert Q.mul(a, Q.add(b, c)) == Q.add(Q.mul(a, b), Q.mul(a, c))
    if a != 0:
        assert Q.mul(a, Q.inv(a)) == 1
    assert Q.parse(Q.format(a)) == a


@given(small_ints)
def test_prime_format_round_trip(x):
    a = F7.from_int(x)
    assert F7.parse(F7.format(a)) == a
