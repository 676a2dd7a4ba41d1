import abc
import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from mintk.errors import InvalidScalarError, FieldMismatchError, CharTwoError
from mintk.misc import DocstringMeta


class Field(metaclass=DocstringMeta):
    '''
    Base class for the exact coefficient fields.

    Field elements are plain Python objects (int for prime fields, Fraction for the rationals)
    so that polynomials can store them in dicts without wrapping.
    Field should not be constructed directly. Use its subclasses instead.
    '''

    #: Characteristic of the field. 0 for the rationals
    characteristic = 0

    @abc.abstractmethod
    def from_int(self, n):
        '''
        Map an integer into the field.

        Parameters
        ----------
        n : int

        Returns
        -------
        value : field element
        '''
        pass

    @abc.abstractmethod
    def add(self, a, b):
        pass

    @abc.abstractmethod
    def mul(self, a, b):
        pass

    @abc.abstractmethod
    def neg(self, a):
        pass

    @abc.abstractmethod
    def inv(self, a):
        '''
        Multiplicative inverse.

        Raises
        ------
        InvalidScalarError
            If `a` is zero
        '''
        pass

    @abc.abstractmethod
    def parse(self, text):
        '''
        Parse a scalar literal like `3`, `-2` or `1/2`.

        Raises
        ------
        InvalidScalarError
            If the literal is malformed or denotes no element of the field
        '''
        pass

    @abc.abstractmethod
    def signed(self, a):
        '''
        Split an element into a sign and the text of its absolute value for printing.

        Returns
        -------
        negative : bool
        text : str
        '''
        pass

    @property
    @abc.abstractmethod
    def dtype(self):
        '''
        The numpy dtype used for dense matrices over this field.
        '''
        pass

    @abc.abstractmethod
    def normalize(self, array):
        '''
        Bring a numpy array produced by integer arithmetic back to canonical representatives.
        '''
        pass

    def coerce(self, value):
        '''
        Bring an int, a Fraction or an element of this field into canonical form.
        '''
        if isinstance(value, Fraction):
            return self.div(self.from_int(value.numerator), self.from_int(value.denominator))
        return self.from_int(value)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def is_one(self, a):
        return a == 1

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def format(self, a):
        negative, text = self.signed(a)
        return '-' + text if negative else text

    def asarray(self, values):
        '''
        Build a dense numpy array over this field from nested lists of field elements.
        '''
        return self.normalize(np.array(values, dtype=self.dtype))

    def zeros(self, shape):
        if self.dtype == object:
            arr = np.empty(shape, dtype=object)
            arr.fill(Fraction(0))
            return arr
        return np.zeros(shape, dtype=self.dtype)

    def identity(self, n):
        arr = self.zeros((n, n))
        for i in range(n):
            arr[i, i] = self.one
        return arr


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class PrimeField(Field):
    '''
    The prime field F_p for an odd prime p < 2^31.

    Elements are Python int in [0, p). Dense matrices use int64 so that a single product of two elements fits.

    Parameters
    ----------
    p : int

    Raises
    ------
    CharTwoError
        If p is 2. Every construction in this package divides by 2 somewhere
    ValueError
        If p is not an odd prime below 2^31
    '''

    def __init__(self, p):
        if p == 2:
            raise CharTwoError('characteristic 2 is not supported')
        if not isinstance(p, int) or p >= 2 ** 31 or not _is_prime(p):
            raise ValueError('Invalid characteristic %s, must be an odd prime below 2^31' % p)
        self.p = p
        self.characteristic = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(('PrimeField', self.p))

    def __repr__(self):
        return '<PrimeField: F_%i>' % self.p

    def from_int(self, n):
        return int(n) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise InvalidScalarError('zero has no inverse in F_%i' % self.p)
        return pow(a, self.p - 2, self.p)

    def parse(self, text):
        text = text.strip()
        m = re.fullmatch(r'([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?', text)
        if m is None:
            raise InvalidScalarError('Invalid scalar literal: %s' % text)
        value = int(m.group(2)) % self.p
        if m.group(3) is not None:
            den = int(m.group(3)) % self.p
            if den == 0:
                raise InvalidScalarError('Denominator of %s vanishes in F_%i' % (text, self.p))
            value = self.div(value, den)
        if m.group(1) == '-':
            value = self.neg(value)
        return value

    def signed(self, a):
        a = int(a) % self.p
        if a > self.p // 2:
            return True, str(self.p - a)
        return False, str(a)

    @property
    def dtype(self):
        return np.int64

    def normalize(self, array):
        return np.mod(array, self.p)


class RationalField(Field):
    '''
    The field of rational numbers. Elements are `fractions.Fraction` and dense matrices use the object dtype.
    '''

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash('RationalField')

    def __repr__(self):
        return '<RationalField: Q>'

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise InvalidScalarError('zero has no inverse in Q')
        return 1 / Fraction(a)

    def parse(self, text):
        text = text.strip()
        m = re.fullmatch(r'([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?', text)
        if m is None:
            raise InvalidScalarError('Invalid scalar literal: %s' % text)
        if m.group(3) is not None and int(m.group(3)) == 0:
            raise InvalidScalarError('Zero denominator in %s' % text)
        value = Fraction(int(m.group(2)), int(m.group(3) or 1))
        return -value if m.group(1) == '-' else value

    def signed(self, a):
        a = Fraction(a)
        return a < 0, str(abs(a))

    @property
    def dtype(self):
        return object

    def normalize(self, array):
        return array


def make_field(characteristic):
    '''
    Build a field from its characteristic. 0 gives the rationals.
    '''
    if characteristic == 0:
        return RationalField()
    return PrimeField(characteristic)


@dataclass(frozen=True)
class FieldScalar:
    '''
    A field element bundled with its field, for callers that want operator syntax.

    Attributes
    ----------
    value : int or Fraction
    field : Field
    '''
    value: object
    field: Field

    def _check(self, other):
        if not isinstance(other, FieldScalar):
            return FieldScalar(self.field.from_int(other), self.field)
        if other.field != self.field:
            raise FieldMismatchError('Cannot combine elements of %s and %s' % (self.field, other.field))
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldScalar(self.field.add(self.value, other.value), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FieldScalar(self.field.sub(self.value, other.value), self.field)

    def __mul__(self, other):
        other = self._check(other)
        return FieldScalar(self.field.mul(self.value, other.value), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(self.field.neg(self.value), self.field)

    def __truediv__(self, other):
        other = self._check(other)
        return FieldScalar(self.field.div(self.value, other.value), self.field)

    def inv(self):
        return FieldScalar(self.field.inv(self.value), self.field)

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __str__(self):
        return self.field.format(self.value)


def field_ops(a, b, op):
    '''
    Apply one field operation to scalars.

    Parameters
    ----------
    a : FieldScalar
    b : FieldScalar or None
        Ignored for the unary operations `inv` and `neg`
    op : str
        One of `add`, `mul`, `inv`, `neg`

    Returns
    -------
    result : FieldScalar

    Raises
    ------
    InvalidScalarError
        On inverting zero
    FieldMismatchError
        If `a` and `b` live in different fields
    '''
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    if op == 'inv':
        return a.inv()
    if op == 'neg':
        return -a
    raise ValueError('Unknown field operation: %s' % op)
