from typing import Dict, Iterable, Optional

from mintk.errors import ArityMismatchError, FieldMismatchError, NonHomogeneousError
from . import monomial as mono
from .field import Field
from .monomial import Monomial


class Polynomial:
    '''
    Sparse multivariate polynomial with exact coefficients.

    Polynomials are immutable. Terms with zero coefficient are never stored,
    so the zero polynomial has an empty term dict.

    Parameters
    ----------
    field : Field
    nvars : int
    terms : dict, optional
        Map from exponent tuple to coefficient. Coefficients are brought into the field

    Attributes
    ----------
    field : Field
    nvars : int
    terms : dict of Monomial -> field element
    '''
    __slots__ = ('field', 'nvars', 'terms', '_lead', '_hash')

    def __init__(self, field: Field, nvars: int, terms: Optional[Dict[Monomial, object]] = None):
        self.field = field
        self.nvars = nvars
        self.terms = {}
        self._lead = None
        self._hash = None
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ArityMismatchError('Monomial %s does not have %i exponents' % (str(m), nvars))
                c = field.coerce(c)
                if not field.is_zero(c):
                    self.terms[tuple(m)] = c

    @classmethod
    def _raw(cls, field, nvars, terms):
        # terms already canonical and free of zeros
        poly = cls.__new__(cls)
        poly.field = field
        poly.nvars = nvars
        poly.terms = terms
        poly._lead = None
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, field, nvars):
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field, nvars, c):
        return cls(field, nvars, {mono.one(nvars): c})

    @classmethod
    def from_monomial(cls, field, nvars, m, c=1):
        return cls(field, nvars, {tuple(m): c})

    @classmethod
    def variable(cls, field, nvars, i):
        return cls._raw(field, nvars, {mono.unit(nvars, i): field.one})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(m) == 0 for m in self.terms)

    @property
    def degree(self):
        '''
        Total degree. -1 for the zero polynomial.
        '''
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_degree(self):
        '''
        The degree of a homogeneous polynomial.

        Raises
        ------
        NonHomogeneousError
        '''
        degrees = {sum(m) for m in self.terms}
        if len(degrees) > 1:
            raise NonHomogeneousError('Polynomial is not homogeneous: %s' % self)
        return degrees.pop() if degrees else -1

    def homogeneous_part(self, d):
        return Polynomial._raw(self.field, self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def homogeneous_parts(self):
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Polynomial._raw(self.field, self.nvars, t) for d, t in sorted(parts.items())}

    @property
    def lead_monomial(self) -> Monomial:
        if self._lead is None:
            if not self.terms:
                raise ValueError('The zero polynomial has no lead term')
            self._lead = max(self.terms, key=mono.degrevlex_key)
        return self._lead

    @property
    def lead_coefficient(self):
        return self.terms[self.lead_monomial]

    def sorted_terms(self):
        '''
        Terms as (monomial, coefficient) pairs in descending degrevlex order.
        '''
        return sorted(self.terms.items(), key=lambda t: mono.degrevlex_key(t[0]), reverse=True)

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ArityMismatchError('Polynomials in %i and %i variables' % (self.nvars, other.nvars))
        if other.field != self.field:
            raise FieldMismatchError('Polynomials over %s and %s' % (self.field, other.field))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.field, self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        field = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = field.add(terms.get(m, field.zero), c)
            if field.is_zero(v):
                terms.pop(m, None)
            else:
                terms[m] = v
        return Polynomial._raw(field, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.field, self.nvars, {m: self.field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(self.field.coerce(other))
        self._check(other)
        field = self.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono.mul(m1, m2)
                v = field.add(terms.get(m, field.zero), field.mul(c1, c2))
                if field.is_zero(v):
                    terms.pop(m, None)
                else:
                    terms[m] = v
        return Polynomial._raw(field, self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Polynomial.constant(self.field, self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c):
        field = self.field
        if field.is_zero(c):
            return Polynomial.zero(field, self.nvars)
        return Polynomial._raw(field, self.nvars, {m: field.mul(v, c) for m, v in self.terms.items()})

    def mul_monomial(self, m: Monomial, c=None):
        field = self.field
        if c is not None and field.is_zero(c):
            return Polynomial.zero(field, self.nvars)
        return Polynomial._raw(field, self.nvars,
                               {mono.mul(k, m): (v if c is None else field.mul(v, c)) for k, v in self.terms.items()})

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.lead_coefficient))

    def coefficient(self, m: Monomial):
        return self.terms.get(tuple(m), self.field.zero)

    def embed(self, nvars, positions):
        '''
        Rename variable i to variable positions[i] of a ring with `nvars` variables.
        '''
        terms = {}
        for m, c in self.terms.items():
            new = [0] * nvars
            for i, e in enumerate(m):
                new[positions[i]] += e
            terms[tuple(new)] = c
        return Polynomial._raw(self.field, nvars, terms)

    def set_variable_zero(self, i):
        '''
        Substitute 0 for variable i and drop it, giving a polynomial in one fewer variable.
        '''
        terms = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                terms[m[:i] + m[i + 1:]] = c
        return Polynomial._raw(self.field, self.nvars - 1, terms)

    def divide_by_variable(self, i):
        '''
        Exact division by variable i.

        Returns
        -------
        quotient : Polynomial or None
            None if some term is not divisible
        '''
        terms = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                return None
            terms[m[:i] + (m[i] - 1,) + m[i + 1:]] = c
        return Polynomial._raw(self.field, self.nvars, terms)

    def variables_used(self) -> Iterable[int]:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return sorted(used)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {mono.one(self.nvars): self.field.from_int(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def format(self, names):
        from .io.polyio import format_polynomial
        return format_polynomial(self, names)

    def __str__(self):
        return self.format(['x%i' % (i + 1) for i in range(self.nvars)])

    def __repr__(self):
        return '<Polynomial: %s>' % self
