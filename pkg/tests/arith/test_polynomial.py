#!/usr/bin/env python3

import os
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mintk.arith import PrimeField, RationalField, Polynomial, parse_polynomial, format_polynomial, \
    PolynomialSyntaxError, monomial_cmp, monomials_of_degree
from mintk.errors import ArityMismatchError, FieldMismatchError, NonHomogeneousError

cwd = os.path.dirname(os.path.abspath(__file__))

F7 = PrimeField(7)
Q = RationalField()

exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exponents, st.integers(-6, 6), max_size=5).map(lambda t: Polynomial(F7, 2, t))


def test_monomial_order():
    assert monomial_cmp((2, 0), (1, 1)) == 1
    assert monomial_cmp((1, 1), (0, 2)) == 1
    assert monomial_cmp((0, 0, 3), (1, 0, 0)) == 1
    assert monomial_cmp((1, 0), (1, 0)) == 0
    assert monomials_of_degree(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(monomials_of_degree(3, 2)) == 6
    with pytest.raises(ArityMismatchError):
        monomial_cmp((1,), (1, 0))


def test_parse_format():
    p = parse_polynomial('x^2 - 2*x*y + 1/2', ['x', 'y'], Q)
    assert p.coefficient((1, 1)) == Fraction(-2)
    assert p.coefficient((0, 0)) == Fraction(1, 2)
    assert p.degree == 2
    assert format_polynomial(p, ['x', 'y']) == 'x^2 - 2*x*y + 1/2'

    q = parse_polynomial('x1x2 + 3 x2^2', ['x1', 'x2'], F7)
    assert q.coefficient((1, 1)) == 1
    assert q.coefficient((0, 2)) == 3
    assert format_polynomial(q, ['x1', 'x2']) == 'x1*x2 + 3*x2^2'

    assert format_polynomial(parse_polynomial('6*x', ['x'], F7), ['x']) == '-x'
    assert format_polynomial(Polynomial.zero(F7, 1), ['x']) == '0'
    assert parse_polynomial('x - x', ['x'], F7).is_zero()


def test_parse_errors():
    with pytest.raises(PolynomialSyntaxError) as e:
        parse_polynomial('x + z', ['x', 'y'], Q)
    assert e.value.column == 5
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial('', ['x'], Q)
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial('x^', ['x'], Q)
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial('x +', ['x'], Q)


def test_arity_and_field():
    x = Polynomial.variable(F7, 2, 0)
    with pytest.raises(ArityMismatchError):
        x + Polynomial.variable(F7, 3, 0)
    with pytest.raises(FieldMismatchError):
        x * Polynomial.variable(Q, 2, 0)
    with pytest.raises(ArityMismatchError):
        Polynomial(F7, 2, {(1,): 1})


def test_homogeneity():
    p = parse_polynomial('x^2 + x*y', ['x', 'y'], F7)
    assert p.is_homogeneous()
    assert p.homogeneous_degree() == 2
    q = p + 1
    assert not q.is_homogeneous()
    with pytest.raises(NonHomogeneousError):
        q.homogeneous_degree()
    assert list(q.homogeneous_parts()) == [0, 2]
    assert Polynomial.zero(F7, 2).degree == -1


def test_divide_by_variable():
    p = parse_polynomial('x*y + y^2', ['x', 'y'], F7)
    assert p.divide_by_variable(1) == parse_polynomial('x + y', ['x', 'y'], F7)
    assert p.divide_by_variable(0) is None
    assert p.set_variable_zero(1) == Polynomial.zero(F7, 1)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert a * 1 == a


@given(polys)
def test_format_parse_round_trip(p):
    if not p.is_zero():
        assert parse_polynomial(format_polynomial(p, ['x', 'y']), ['x', 'y'], F7) == p
