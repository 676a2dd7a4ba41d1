import itertools
from typing import List, Optional, Sequence

import numpy as np

from mintk.arith import Polynomial, EchelonBasis
from mintk.arith import monomial as mono
from mintk.arith import nullspace
from mintk.errors import NonHomogeneousError, NotArtinianError, CapTooLowError
from .ring import RingPresentation


class GradedIdeal:
    '''
    A homogeneous ideal of a RingPresentation, given by generators in normal form.

    Degree-wise spans are computed on demand and cached, so membership and comparison are exact linear algebra.

    Parameters
    ----------
    ring : RingPresentation
    generators : list of Polynomial or str
        Generators that are not homogeneous are split into their homogeneous components
        only if `split` is True; otherwise NonHomogeneousError is raised

    Attributes
    ----------
    ring : RingPresentation
    generators : list of Polynomial
    '''

    def __init__(self, ring: RingPresentation, generators: Sequence = (), split=False):
        self.ring = ring
        gens = []
        for g in generators:
            g = ring.polynomial(g)
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                if not split:
                    raise NonHomogeneousError('Ideal generator is not homogeneous: %s' % ring.format(g))
                gens.extend(p for p in g.homogeneous_parts().values() if not p.is_zero())
            else:
                gens.append(g)
        self.generators: List[Polynomial] = gens
        self._spans = {}
        self._minimal = None

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    def __repr__(self):
        return '<GradedIdeal: %s>' % self.format()

    def __str__(self):
        return self.format()

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return any(g.degree == 0 for g in self.generators)

    @property
    def max_generator_degree(self):
        return max((g.degree for g in self.generators), default=-1)

    def span(self, d) -> EchelonBasis:
        '''
        Basis of the degree-d component I_d inside R_d.
        '''
        cached = self._spans.get(d)
        if cached is not None:
            return cached
        ring = self.ring
        index = ring.monomial_index(d)
        rows = []
        for g in self.generators:
            k = d - g.degree
            if k < 0:
                continue
            for u in ring.standard_monomials(k):
                vec = ring.field.zeros(len(index))
                nonzero = False
                for m, c in g.terms.items():
                    for sm, sc in ring.nf_monomial(mono.mul(u, m)).items():
                        vec[index[sm]] = ring.field.add(vec[index[sm]], ring.field.mul(c, sc))
                        nonzero = True
                if nonzero:
                    rows.append(vec)
        basis = EchelonBasis(len(index), ring.field)
        if rows:
            basis.extend(np.array(rows, dtype=ring.field.dtype))
        self._spans[d] = basis
        return basis

    def dimension(self, d) -> int:
        return self.span(d).rank

    def contains(self, f: Polynomial) -> bool:
        f = self.ring.normal_form(f)
        for d, part in f.homogeneous_parts().items():
            if not self.span(d).contains(self.ring.to_vector(part, d)):
                return False
        return True

    def contains_ideal(self, other: 'GradedIdeal') -> bool:
        return all(self.contains(g) for g in other.generators)

    def minimal_generators(self) -> List[Polynomial]:
        '''
        A minimal generating set, chosen greedily from the generators in ascending degree.
        '''
        if self._minimal is not None:
            return self._minimal
        ring = self.ring
        chosen = []
        ordered = sorted(self.generators, key=lambda p: p.degree)
        for d, group in itertools.groupby(ordered, key=lambda p: p.degree):
            # span of the lower-degree choices, extended in place by this degree
            basis = GradedIdeal(ring, chosen).span(d)
            for g in group:
                if basis.add(ring.to_vector(g, d)):
                    chosen.append(g)
        self._minimal = chosen
        return chosen

    def __mul__(self, other: 'GradedIdeal') -> 'GradedIdeal':
        return GradedIdeal(self.ring, [self.ring.mul(a, b) for a in self.generators for b in other.generators])

    def format(self) -> str:
        '''
        Text like `(x, y^2)`, `0` for the zero ideal and `(1)` for the unit ideal.
        '''
        gens = self.minimal_generators()
        if not gens:
            return '0'
        return '(%s)' % ', '.join(self.ring.format(g.monic()) for g in gens)


def max_ideal_power(ring: RingPresentation, r) -> GradedIdeal:
    '''
    The ideal m^r generated by the degree-r monomials.
    '''
    if r == 0:
        return GradedIdeal.unit(ring)
    gens = [Polynomial.from_monomial(ring.field, ring.nvars, m) for m in mono.monomials_of_degree(ring.nvars, r)]
    ideal = GradedIdeal(ring, gens)
    ideal.generators = ideal.minimal_generators()
    return ideal


def socle(ring: RingPresentation) -> GradedIdeal:
    '''
    The socle (0 : m) of an artinian ring, computed degree by degree as the kernel of R_d -> R_{d+1}^e.

    Raises
    ------
    NotArtinianError
    '''
    if not ring.is_artinian:
        raise NotArtinianError('The socle is only computed for artinian rings, %s is not' % ring)
    gens = []
    for d in range(ring.artinian_top + 1):
        n = ring.hilbert_function(d)
        if n == 0:
            continue
        blocks = [ring.multiplication_matrix(x, d) for x in ring.gens()]
        stacked = np.vstack(blocks) if blocks and blocks[0].shape[0] else ring.field.zeros((0, n))
        for vec in nullspace(stacked, ring.field):
            gens.append(ring.from_vector(vec, d))
    return GradedIdeal(ring, gens)


class IdealComparison:
    '''
    Outcome of comparing two ideals through a degree.

    Attributes
    ----------
    relation : str
        One of EQUAL, A_PROPER_IN_B, B_PROPER_IN_A, INCOMPARABLE
    witness_a : Polynomial or None
        A generator of the first ideal outside the second
    witness_b : Polynomial or None
        A generator of the second ideal outside the first
    up_to : int
        Degree through which the comparison holds
    '''

    #: The ideals agree through the degree
    EQUAL = 'equal'
    #: The first ideal is strictly contained in the second
    A_PROPER_IN_B = 'a_proper_in_b'
    #: The second ideal is strictly contained in the first
    B_PROPER_IN_A = 'b_proper_in_a'
    #: Neither contains the other
    INCOMPARABLE = 'incomparable'

    def __init__(self, relation, witness_a=None, witness_b=None, up_to=None):
        self.relation = relation
        self.witness_a = witness_a
        self.witness_b = witness_b
        self.up_to = up_to

    def __repr__(self):
        return '<IdealComparison: %s>' % self.relation


def ideal_compare(a: GradedIdeal, b: GradedIdeal, up_to: Optional[int] = None) -> IdealComparison:
    '''
    Compare two ideals of the same ring by degree-wise spans.

    Parameters
    ----------
    a : GradedIdeal
    b : GradedIdeal
    up_to : int, optional
        Degree through which to compare. Default is the largest generator degree of either ideal,
        which makes the comparison exact

    Returns
    -------
    comparison : IdealComparison

    Raises
    ------
    CapTooLowError
        If `up_to` is below a generator degree, so the answer would be uncertified
    '''
    needed = max(a.max_generator_degree, b.max_generator_degree)
    if up_to is None:
        up_to = needed
    elif up_to < needed:
        raise CapTooLowError('Ideal comparison needs degree %i, got %i' % (needed, up_to), suggested_cap=needed)
    out_a = next((g for g in a.minimal_generators() if g.degree <= up_to and not b.contains(g)), None)
    out_b = next((g for g in b.minimal_generators() if g.degree <= up_to and not a.contains(g)), None)
    if out_a is None and out_b is None:
        relation = IdealComparison.EQUAL
    elif out_a is None:
        relation = IdealComparison.A_PROPER_IN_B
    elif out_b is None:
        relation = IdealComparison.B_PROPER_IN_A
    else:
        relation = IdealComparison.INCOMPARABLE
    return IdealComparison(relation, out_a, out_b, up_to)
