import math
from typing import List, Optional, Sequence

import pandas as pd

from mintk.arith import Polynomial
from mintk.ring import GradedIdeal
from mintk.resolution import Resolution
from mintk.utils import first_persistent_onset
from .minors import minors_ideal, DEFAULT_MAX_MINORS


class MinorVerdict:
    '''
    How the ideal I_{n,r} of r x r minors of the n-th differential compares with m^r.

    Minimality gives I_{n,r} inside m^r, and m^r is generated in degree r, so equality is decided by the
    degree-r component alone.

    Attributes
    ----------
    n : int
    r : int
    ideal : GradedIdeal
        The minors found. Holds only degree-r minors when `exhaustive` is False
    relation : str
        One of EQUAL, PROPER, ZERO
    certified : bool
        An equal verdict is always certified. A proper or zero verdict is certified when the resolution step is
        certified and the degree-r component of the minors was computed completely
    witness : Polynomial or None
        A degree-r monomial of m^r outside the ideal, for proper and zero verdicts
    exhaustive : bool
        Whether every r x r minor was enumerated
    complete_through : int or float
        Degree through which the step is known complete
    '''

    #: I_{n,r} = m^r
    EQUAL = 'equal'
    #: 0 != I_{n,r} strictly inside m^r
    PROPER = 'proper'
    #: I_{n,r} = 0 while m^r != 0
    ZERO = 'zero'

    def __init__(self, n, r, ideal: GradedIdeal, relation, certified, witness: Optional[Polynomial] = None,
                 exhaustive=True, complete_through=math.inf):
        self.n = n
        self.r = r
        self.ideal = ideal
        self.relation = relation
        self.certified = certified
        self.witness = witness
        self.exhaustive = exhaustive
        self.complete_through = complete_through

    def __repr__(self):
        return '<MinorVerdict: %s>' % self.format()

    @property
    def is_equal(self):
        return self.relation == MinorVerdict.EQUAL

    def power_text(self):
        return 'm' if self.r == 1 else 'm^%i' % self.r

    def ideal_text(self):
        text = self.ideal.format()
        if not self.exhaustive:
            text += ' + ...'
        return text

    def certificate_text(self):
        if self.certified:
            return 'certified'
        return 'up to degree %s' % self.complete_through

    def format(self) -> str:
        '''
        One report line, e.g. `I(n=5, r=2) = m^2 [certified]` or `I(n=4, r=1) = (x2) ⊊ m [certified]`.
        '''
        if self.relation == MinorVerdict.EQUAL:
            body = self.power_text()
        elif self.relation == MinorVerdict.ZERO:
            body = '0 ⊊ %s' % self.power_text()
        else:
            body = '%s ⊊ %s' % (self.ideal_text(), self.power_text())
        return 'I(n=%i, r=%i) = %s [%s]' % (self.n, self.r, body, self.certificate_text())

    def to_record(self) -> dict:
        ring = self.ideal.ring
        return {
            'n'        : self.n,
            'r'        : self.r,
            'verdict'  : self.relation,
            'ideal'    : self.power_text() if self.is_equal else self.ideal_text(),
            'certified': self.certified,
            'witness'  : ring.format(self.witness) if self.witness is not None else None,
        }


def minors_of_resolution(res: Resolution, n, r, max_minors=DEFAULT_MAX_MINORS) -> MinorVerdict:
    '''
    Compute I_{n,r} of a resolution and decide its relation to m^r.

    Parameters
    ----------
    res : Resolution
    n : int
        Homological step, at least 1. Steps past a terminated resolution have the zero differential
    r : int
        Minor size, at least 1
    max_minors : int

    Returns
    -------
    verdict : MinorVerdict
    '''
    if r < 1:
        raise ValueError('Minor size must be at least 1, got %i' % r)
    if n < 1 or (n > res.length and not res.terminated):
        raise ValueError('Step %i is not available in a resolution of length %i' % (n, res.length))
    ring = res.ring
    if ring.hilbert_function(r) == 0:
        # m^r = 0, so every ideal inside it is equal to it
        return MinorVerdict(n, r, GradedIdeal.zero(ring), MinorVerdict.EQUAL, True)

    if n > res.length:
        ideal = GradedIdeal.zero(ring)
        witness = Polynomial.from_monomial(ring.field, ring.nvars, ring.standard_monomials(r)[0])
        return MinorVerdict(n, r, ideal, MinorVerdict.ZERO, res.certified(n), witness,
                            complete_through=res.complete_through(n))

    result = minors_ideal(res.differential(n), r, max_minors)
    if result.saturated:
        return MinorVerdict(n, r, result.ideal, MinorVerdict.EQUAL, True, exhaustive=result.exhaustive)

    witness = None
    for m in ring.standard_monomials(r):
        poly = Polynomial.from_monomial(ring.field, ring.nvars, m)
        if not result.degree_span.contains(ring.to_vector(poly, r)):
            witness = poly
            break
    if result.exhaustive and result.ideal.is_zero():
        relation = MinorVerdict.ZERO
    else:
        relation = MinorVerdict.PROPER
    certified = res.certified(n) and result.degree_complete
    return MinorVerdict(n, r, result.ideal, relation, certified, witness, result.exhaustive,
                        res.complete_through(n))


def minors_onset(verdicts: Sequence[MinorVerdict]) -> Optional[int]:
    '''
    The first n from which every verdict in the (n-ordered) list is equal, or None.
    '''
    return first_persistent_onset([v.is_equal for v in verdicts], [v.n for v in verdicts])


def verdict_table(verdicts: Sequence[MinorVerdict]) -> pd.DataFrame:
    '''
    Verdicts as a table with one row per (n, r).
    '''
    records: List[dict] = [v.to_record() for v in verdicts]
    df = pd.DataFrame(records, columns=['n', 'r', 'verdict', 'ideal', 'certified', 'witness'])
    return df.set_index(['n', 'r'])
