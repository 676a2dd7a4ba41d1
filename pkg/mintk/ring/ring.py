import math
import re
from typing import Dict, List, Sequence, Tuple

import numpy as np

from mintk import logger
from mintk.arith import Polynomial, Field, parse_polynomial, format_polynomial, EchelonBasis
from mintk.arith import monomial as mono
from mintk.errors import NonHomogeneousError, ArityMismatchError
from .groebner import buchberger


class RingPresentation:
    '''
    A standard graded quotient k[x_1..x_e]/I with I homogeneous and contained in (x)^2.

    Elements are represented by their normal form modulo the reduced Groebner basis of I in degrevlex,
    i.e. by linear combinations of standard monomials.
    The first declared variable is the largest in the term order.

    Parameters
    ----------
    field : Field
    variables : list of str
    relations : list of Polynomial or str, optional
        Strings are parsed in the given variables

    Attributes
    ----------
    field : Field
    variables : tuple of str
    relations : tuple of Polynomial
    groebner_basis : tuple of Polynomial
    '''

    _RE_NAME = re.compile(r'[A-Za-z_][A-Za-z_0-9]*')

    def __init__(self, field: Field, variables: Sequence[str], relations=()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError('Duplicated variable names: %s' % ', '.join(variables))
        for name in variables:
            if not self._RE_NAME.fullmatch(name):
                raise ValueError('Invalid variable name: %s' % name)
        self.field = field
        self.variables = variables
        rels = []
        for rel in relations:
            if isinstance(rel, str):
                rel = parse_polynomial(rel, variables, field)
            if rel.nvars != self.nvars:
                raise ArityMismatchError('Relation %s is not in %i variables' % (rel, self.nvars))
            if rel.is_zero():
                continue
            if not rel.is_homogeneous():
                raise NonHomogeneousError('Relation is not homogeneous: %s' % rel.format(variables))
            if rel.degree < 2:
                raise ValueError('Relation %s has degree below 2, the presentation would not be minimal'
                                 % rel.format(variables))
            rels.append(rel)
        self.relations = tuple(rels)
        self.groebner_basis = tuple(buchberger(list(rels)))
        self._leads = [g.lead_monomial for g in self.groebner_basis]
        self._nf_cache: Dict[tuple, Dict[tuple, object]] = {}
        self._std_cache: Dict[int, Tuple[tuple, ...]] = {}
        self._index_cache: Dict[int, Dict[tuple, int]] = {}
        self._top = None

    def __repr__(self):
        return '<RingPresentation: %s>' % self

    def __str__(self):
        if not self.relations:
            return 'k[%s]' % ', '.join(self.variables)
        return 'k[%s]/(%s)' % (', '.join(self.variables), ', '.join(self.format(r) for r in self.relations))

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def embdim(self):
        '''
        Embedding dimension. Relations lie in (x)^2, so this is the number of variables.
        '''
        return len(self.variables)

    def variable_index(self, name) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError('Unknown variable %s in %s' % (name, self))

    def variable(self, name_or_index) -> Polynomial:
        i = name_or_index if isinstance(name_or_index, int) else self.variable_index(name_or_index)
        return Polynomial.variable(self.field, self.nvars, i)

    def gens(self) -> List[Polynomial]:
        return [self.variable(i) for i in range(self.nvars)]

    def one(self) -> Polynomial:
        return Polynomial.constant(self.field, self.nvars, 1)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.field, self.nvars)

    def polynomial(self, text) -> Polynomial:
        '''
        Parse text in the variables of this ring and return its normal form.
        '''
        if isinstance(text, Polynomial):
            return self.normal_form(text)
        return self.normal_form(parse_polynomial(str(text), self.variables, self.field))

    def format(self, f: Polynomial) -> str:
        return format_polynomial(f, self.variables)

    def is_standard(self, m) -> bool:
        return not any(mono.divides(lm, m) for lm in self._leads)

    def nf_monomial(self, m) -> Dict[tuple, object]:
        '''
        Normal form of a monomial as a dict from standard monomials to coefficients.
        '''
        m = tuple(m)
        cached = self._nf_cache.get(m)
        if cached is not None:
            return cached
        field = self.field
        for g in self.groebner_basis:
            lm = g.lead_monomial
            if mono.divides(lm, m):
                q = mono.quotient(m, lm)
                # g is monic: m = q*lm = -q*(g - lm) modulo I
                result = {}
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    for sm, sc in self.nf_monomial(mono.mul(q, gm)).items():
                        v = field.sub(result.get(sm, field.zero), field.mul(gc, sc))
                        if field.is_zero(v):
                            result.pop(sm, None)
                        else:
                            result[sm] = v
                break
        else:
            result = {m: field.one}
        self._nf_cache[m] = result
        return result

    def normal_form(self, f: Polynomial) -> Polynomial:
        '''
        Unique representative of `f` modulo the relations.

        Raises
        ------
        ArityMismatchError
        '''
        if f.nvars != self.nvars:
            raise ArityMismatchError('Polynomial in %i variables used in a ring with %i' % (f.nvars, self.nvars))
        field = self.field
        terms = {}
        for m, c in f.terms.items():
            for sm, sc in self.nf_monomial(m).items():
                v = field.add(terms.get(sm, field.zero), field.mul(c, sc))
                if field.is_zero(v):
                    terms.pop(sm, None)
                else:
                    terms[sm] = v
        return Polynomial._raw(field, self.nvars, terms)

    def mul(self, f: Polynomial, g: Polynomial) -> Polynomial:
        return self.normal_form(f * g)

    def reduces_to_zero(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def standard_monomials(self, d) -> Tuple[tuple, ...]:
        '''
        Standard monomials of degree `d` in descending degrevlex order. They form a basis of R_d.
        '''
        cached = self._std_cache.get(d)
        if cached is None:
            cached = tuple(m for m in mono.monomials_of_degree(self.nvars, d) if self.is_standard(m))
            self._std_cache[d] = cached
        return cached

    def monomial_index(self, d) -> Dict[tuple, int]:
        cached = self._index_cache.get(d)
        if cached is None:
            cached = {m: i for i, m in enumerate(self.standard_monomials(d))}
            self._index_cache[d] = cached
        return cached

    def hilbert_function(self, d) -> int:
        '''
        dim_k R_d, counted as the number of standard monomials.
        '''
        if d < 0:
            return 0
        return len(self.standard_monomials(d))

    def hilbert_function_by_rank(self, d) -> int:
        '''
        dim_k R_d, counted independently of the Groebner basis as dim S_d minus the rank of I_d.
        '''
        if d < 0:
            return 0
        monos = mono.monomials_of_degree(self.nvars, d)
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for rel in self.relations:
            k = d - rel.degree
            for u in mono.monomials_of_degree(self.nvars, k):
                vec = self.field.zeros(len(monos))
                for m, c in rel.terms.items():
                    vec[index[mono.mul(u, m)]] = c
                rows.append(vec)
        if not rows:
            return len(monos)
        basis = EchelonBasis.from_rows(np.array(rows, dtype=self.field.dtype), self.field, len(monos))
        return len(monos) - basis.rank

    @property
    def is_artinian(self) -> bool:
        '''
        Whether R has finite length, i.e. every variable has a pure power among the lead monomials.
        '''
        for i in range(self.nvars):
            if not any(sum(lm) == lm[i] for lm in self._leads):
                return False
        return True

    @property
    def artinian_top(self):
        '''
        The top degree h with R_h != 0. math.inf for non-artinian rings.
        '''
        if self._top is None:
            if not self.is_artinian:
                self._top = math.inf
            else:
                d = 0
                while self.hilbert_function(d + 1) > 0:
                    d += 1
                self._top = d
        return self._top

    @property
    def length(self):
        '''
        dim_k R. math.inf for non-artinian rings.
        '''
        if not self.is_artinian:
            return math.inf
        return sum(self.hilbert_function(d) for d in range(self.artinian_top + 1))

    def hilbert_series(self, up_to) -> List[int]:
        return [self.hilbert_function(d) for d in range(up_to + 1)]

    def to_vector(self, f: Polynomial, d) -> np.ndarray:
        '''
        Coordinates of the degree-d part of `f` in the standard monomial basis of R_d.
        '''
        index = self.monomial_index(d)
        vec = self.field.zeros(len(index))
        for m, c in self.normal_form(f.homogeneous_part(d)).terms.items():
            vec[index[m]] = c
        return vec

    def from_vector(self, vec, d) -> Polynomial:
        monos = self.standard_monomials(d)
        terms = {monos[i]: self.field.coerce(vec[i]) for i in np.flatnonzero(vec != 0)}
        return Polynomial(self.field, self.nvars, terms)

    def multiplication_matrix(self, f: Polynomial, d) -> np.ndarray:
        '''
        Matrix of multiplication by a homogeneous `f` from R_d to R_{d+deg f}. Columns are images of standard monomials.
        '''
        k = f.homogeneous_degree()
        target = self.monomial_index(d + k)
        source = self.standard_monomials(d)
        mat = self.field.zeros((len(target), len(source)))
        for j, u in enumerate(source):
            for m, c in f.terms.items():
                for sm, sc in self.nf_monomial(mono.mul(u, m)).items():
                    mat[target[sm], j] = self.field.add(mat[target[sm], j], self.field.mul(c, sc))
        return mat

    def embed_polynomial(self, f: Polynomial, positions) -> Polynomial:
        '''
        Map a polynomial of another ring into this one, sending its variable i to variable positions[i],
        and return the normal form.
        '''
        return self.normal_form(f.embed(self.nvars, positions))

    def with_variable_last(self, name) -> 'RingPresentation':
        '''
        The same ring with variable `name` moved to the last (smallest) position.
        '''
        i = self.variable_index(name)
        order = [k for k in range(self.nvars) if k != i] + [i]
        positions = [order.index(k) for k in range(self.nvars)]
        variables = [self.variables[k] for k in order]
        relations = [r.embed(self.nvars, positions) for r in self.relations]
        logger.info('Reordering variables of %s so that %s is last' % (self, name))
        return RingPresentation(self.field, variables, relations)
