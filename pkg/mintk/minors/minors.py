import itertools
import math
from typing import Dict, List, Sequence, Tuple

from mintk import logger
from mintk.arith import EchelonBasis, Polynomial
from mintk.ring import GradedIdeal, RingPresentation
from mintk.resolution import GradedMatrix

#: Largest number of r x r minors enumerated one by one before switching to the degree-r span search
DEFAULT_MAX_MINORS = 200000


class MinorExpansion:
    '''
    Determinants of square submatrices of a graded matrix by Laplace expansion along the first row,
    with every sub-minor memoized so that enumerating all minors of one size shares the smaller ones.

    Parameters
    ----------
    A : GradedMatrix
    linear_only : bool
        Replace every entry of degree other than one by zero. Then the determinant of an r x r submatrix
        is its degree-r minor, which is the only part of I_r(A) that can reach the degree-r component
    '''

    def __init__(self, A: GradedMatrix, linear_only=False):
        self.ring = A.ring
        if linear_only:
            self._entries = {k: p for k, p in A.entries.items() if p.degree == 1}
        else:
            self._entries = dict(A.entries)
        self._rows: Dict[int, Dict[int, Polynomial]] = {}
        for (i, j), p in self._entries.items():
            self._rows.setdefault(i, {})[j] = p
        self._memo: Dict[Tuple[tuple, tuple], Polynomial] = {}

    @property
    def nonzero_rows(self) -> List[int]:
        return sorted(self._rows)

    @property
    def nonzero_columns(self) -> List[int]:
        return sorted({j for _, j in self._entries})

    def column_support(self, j) -> List[int]:
        return sorted(i for i, row in self._rows.items() if j in row)

    def clear(self):
        self._memo.clear()

    def determinant(self, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
        '''
        Determinant of the submatrix on `rows` and `cols`, in normal form.
        '''
        rows, cols = tuple(rows), tuple(cols)
        if len(rows) != len(cols):
            raise ValueError('Minor needs as many rows as columns')
        if not rows:
            return self.ring.one()
        key = (rows, cols)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        ring = self.ring
        first = self._rows.get(rows[0], {})
        total = ring.zero()
        for k, j in enumerate(cols):
            a = first.get(j)
            if a is None:
                continue
            sub = self.determinant(rows[1:], cols[:k] + cols[k + 1:])
            if sub.is_zero():
                continue
            term = ring.mul(a, sub)
            total = total - term if k % 2 else total + term
        self._memo[key] = total
        return total


def minor_count(A: GradedMatrix, r) -> int:
    '''
    Number of r x r submatrices left after pruning zero rows and columns.
    '''
    exp = MinorExpansion(A)
    return math.comb(len(exp.nonzero_rows), r) * math.comb(len(exp.nonzero_columns), r)


def all_minors(A: GradedMatrix, r):
    '''
    Generate (rows, cols, minor) for every nonzero r x r minor of A.
    Rows and columns that are entirely zero are skipped.
    '''
    exp = MinorExpansion(A)
    for cs in itertools.combinations(exp.nonzero_columns, r):
        support = sorted(set(itertools.chain.from_iterable(exp.column_support(j) for j in cs)))
        for rs in itertools.combinations(support, r):
            minor = exp.determinant(rs, cs)
            if not minor.is_zero():
                yield rs, cs, minor


class MinorsResult:
    '''
    Outcome of computing I_r(A).

    Attributes
    ----------
    ideal : GradedIdeal
        The ideal generated by the minors found. Complete when `exhaustive` is True,
        otherwise it holds only degree-r minors
    exhaustive : bool
        Whether every r x r minor was enumerated
    degree_span : EchelonBasis
        Span of the degree-r component of the ideal inside R_r
    degree_complete : bool
        Whether `degree_span` is the full degree-r component of I_r(A)
    examined : int
        Number of submatrices whose determinant was computed
    '''

    def __init__(self, ideal: GradedIdeal, exhaustive, degree_span: EchelonBasis, degree_complete, examined):
        self.ideal = ideal
        self.exhaustive = exhaustive
        self.degree_span = degree_span
        self.degree_complete = degree_complete
        self.examined = examined

    @property
    def saturated(self) -> bool:
        '''
        Whether the degree-r component equals R_r, i.e. I_r(A) contains m^r.
        '''
        return self.degree_span.is_full()


def _degree_span_search(A: GradedMatrix, r, budget) -> Tuple[List[Polynomial], EchelonBasis, bool, int]:
    ring = A.ring
    target_dim = ring.hilbert_function(r)
    basis = EchelonBasis(target_dim, ring.field)
    found = []
    exp = MinorExpansion(A, linear_only=True)
    examined = 0
    if target_dim == 0:
        return found, basis, True, examined
    for cs in itertools.combinations(exp.nonzero_columns, r):
        support = sorted(set(itertools.chain.from_iterable(exp.column_support(j) for j in cs)))
        for rs in itertools.combinations(support, r):
            minor = exp.determinant(rs, cs)
            examined += 1
            if not minor.is_zero() and basis.add(ring.to_vector(minor, r)):
                found.append(minor)
                if basis.is_full():
                    return found, basis, True, examined
            if examined >= budget:
                logger.warning('Degree-%i minor search stopped after %i submatrices with span %i of %i'
                               % (r, examined, basis.rank, target_dim))
                return found, basis, False, examined
        # bound the memo
        if len(exp._memo) > budget:
            exp.clear()
    return found, basis, True, examined


def minors_ideal(A: GradedMatrix, r, max_minors=DEFAULT_MAX_MINORS, full=False) -> MinorsResult:
    '''
    The ideal I_r(A) generated by the r x r minors of A.

    When the number of r x r submatrices exceeds `max_minors`, only minors of degree exactly r are searched,
    stopping as soon as they span R_r. This decides whether I_r(A) = m^r for a minimal A
    without enumerating the higher-degree minors.

    Parameters
    ----------
    A : GradedMatrix
    r : int
    max_minors : int
    full : bool
        Always enumerate every minor

    Returns
    -------
    result : MinorsResult
    '''
    if r < 0:
        raise ValueError('Minor size must be non-negative, got %i' % r)
    ring = A.ring
    if r == 0:
        basis = EchelonBasis(0, ring.field)
        return MinorsResult(GradedIdeal.unit(ring), True, basis, True, 0)
    if r == 1:
        ideal = GradedIdeal(ring, list(A.entries.values()))
        return MinorsResult(ideal, True, ideal.span(1), True, len(A.entries))

    count = minor_count(A, r)
    if full or count <= max_minors:
        gens = [minor for _, _, minor in all_minors(A, r)]
        ideal = GradedIdeal(ring, gens)
        return MinorsResult(ideal, True, ideal.span(r), True, count)

    logger.info('%i minors of size %i exceed the limit %i, searching the degree-%i span'
                % (count, r, max_minors, r))
    found, basis, complete, examined = _degree_span_search(A, r, max_minors)
    return MinorsResult(GradedIdeal(ring, found), False, basis, complete, examined)


def product_ideal(ring: RingPresentation, ideals: Sequence[GradedIdeal]) -> GradedIdeal:
    result = GradedIdeal.unit(ring)
    for ideal in ideals:
        result = result * ideal
        result.generators = result.minimal_generators()
    return result
