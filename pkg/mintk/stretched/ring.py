from typing import Optional, Sequence

from mintk import logger
from mintk.arith import Field, Polynomial, make_field
from mintk.errors import CharTwoError, InvalidUnitError, NonHomogeneousError, SelfCheckError
from mintk.ring import RingPresentation, GradedIdeal, socle, ideal_compare, IdealComparison


class StretchedGorensteinRing(RingPresentation):
    '''
    The stretched Gorenstein ring k[x_1..x_e]/({x_i x_j : i != j}, {x_1^s - u_i x_i^2 : i >= 2}).

    Variables are named x1 .. xe but declared in the order xe, ..., x1,
    so that x1 is the smallest variable in degrevlex and the normal form of x_i^2 is a multiple of x1^s.
    Only s = 2 gives homogeneous relations, which the graded engine requires.

    Parameters
    ----------
    field : Field
    e : int
        Embedding dimension, at least 2
    s : int
        Socle degree. Must be 2
    units : list of scalars, optional
        u_2 .. u_e. Default is all ones

    Attributes
    ----------
    e : int
    s : int
    units : tuple of field elements

    Raises
    ------
    CharTwoError
    InvalidUnitError
        If a unit is zero
    NonHomogeneousError
        If s is not 2
    SelfCheckError
        If the Hilbert function or the socle is not the expected one
    '''

    def __init__(self, field: Field, e, s=2, units: Optional[Sequence] = None):
        if field.characteristic == 2:
            raise CharTwoError('Stretched Gorenstein normal forms need characteristic other than 2')
        if e < 2:
            raise ValueError('Embedding dimension of a stretched Gorenstein ring must be at least 2, got %i' % e)
        if s < 2:
            raise ValueError('Socle degree must be at least 2, got %i' % s)
        if s != 2:
            raise NonHomogeneousError('x1^%i - u x_i^2 is not homogeneous; with s = %i the ring is not standard graded'
                                      % (s, s))
        if units is None:
            units = [1] * (e - 1)
        if len(units) != e - 1:
            raise ValueError('Expect %i units u_2..u_%i, got %i' % (e - 1, e, len(units)))
        units = tuple(field.coerce(getattr(u, 'value', u)) for u in units)
        for i, u in enumerate(units, start=2):
            if field.is_zero(u):
                raise InvalidUnitError('Unit u_%i is zero' % i)
        self.e = e
        self.s = s
        self.units = units

        nvars = e
        variables = ['x%i' % i for i in range(e, 0, -1)]
        x = {i: Polynomial.variable(field, nvars, e - i) for i in range(1, e + 1)}
        relations = []
        for i in range(1, e + 1):
            for j in range(i + 1, e + 1):
                relations.append(x[i] * x[j])
        for i in range(2, e + 1):
            relations.append(x[1] ** s - (x[i] ** 2).scale(units[i - 2]))
        super().__init__(field, variables, relations)
        self._self_check()

    def __repr__(self):
        return '<StretchedGorensteinRing: e=%i, s=%i>' % (self.e, self.s)

    def index(self, i) -> int:
        '''
        Position of x_i among the declared variables.
        '''
        if not 1 <= i <= self.e:
            raise ValueError('No variable x%i in a ring of embedding dimension %i' % (i, self.e))
        return self.e - i

    def x(self, i) -> Polynomial:
        return self.variable(self.index(i))

    def unit(self, i):
        return self.field.one if i == 1 else self.units[i - 2]

    @property
    def socle_generator(self) -> Polynomial:
        return self.x(1) ** self.s

    @property
    def expected_length(self):
        return self.e + self.s

    def _self_check(self):
        expected = [1, self.e] + [1] * (self.s - 1) + [0]
        found = self.hilbert_series(self.s + 1)
        if found != expected:
            raise SelfCheckError('Hilbert function of %s is %s, expected %s' % (self, found, expected))
        x1s = self.socle_generator
        for i in range(2, self.e + 1):
            if not self.reduces_to_zero((self.x(i) ** 2).scale(self.unit(i)) - x1s):
                raise SelfCheckError('u_%i x%i^2 does not reduce to x1^%i' % (i, i, self.s))
            for j in range(1, i):
                if not self.reduces_to_zero(self.x(i) * self.x(j)):
                    raise SelfCheckError('x%i x%i is not zero' % (j, i))
        soc = socle(self)
        if ideal_compare(soc, GradedIdeal(self, [x1s])).relation != IdealComparison.EQUAL:
            raise SelfCheckError('Socle of %s is %s, expected (x1^%i)' % (self, soc.format(), self.s))
        if sum(soc.dimension(d) for d in range(self.s + 1)) != 1:
            raise SelfCheckError('Socle of %s is not one-dimensional' % self)
        logger.debug('%r: H = %s, socle (x1^%i)' % (self, found, self.s))


def build_stretched(field, e, s=2, units: Optional[Sequence] = None) -> StretchedGorensteinRing:
    '''
    Build the stretched Gorenstein ring of embedding dimension `e` in its normal form.

    Parameters
    ----------
    field : Field or int
        An int is read as the characteristic
    e : int
    s : int
    units : list of scalars, optional

    Returns
    -------
    ring : StretchedGorensteinRing
    '''
    if not isinstance(field, Field):
        field = make_field(field)
    return StretchedGorensteinRing(field, e, s, units)
