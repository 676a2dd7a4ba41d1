from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from mintk.arith import Polynomial, RationalField
from mintk.errors import BadEmbeddingError, RankMismatchError
from mintk.ring import GradedIdeal, IdealComparison, RingPresentation, ideal_compare
from mintk.resolution import GradedFreeModule, GradedMatrix, Resolution
from .minors import all_minors, minors_ideal, product_ideal


@dataclass
class LawCheck:
    '''
    Outcome of checking one law of minors on one input.

    Attributes
    ----------
    law : str
    passed : bool
    detail : str
        Description of the counterexample, or of what was checked
    '''
    law: str
    passed: bool
    detail: str = ''

    def __bool__(self):
        return self.passed


def random_scalar(field, rng: np.random.Generator, nonzero=False):
    if isinstance(field, RationalField):
        low, high = -3, 4
    else:
        low, high = 0, field.p
    while True:
        c = field.from_int(int(rng.integers(low, high)))
        if not (nonzero and field.is_zero(c)):
            return c


def random_homogeneous(ring: RingPresentation, d, rng: np.random.Generator, density=1.0) -> Polynomial:
    '''
    A random element of R_d in normal form. Zero for negative d.
    '''
    if d < 0:
        return ring.zero()
    terms = {}
    for m in ring.standard_monomials(d):
        if density >= 1 or rng.random() < density:
            c = random_scalar(ring.field, rng)
            if not ring.field.is_zero(c):
                terms[m] = c
    return Polynomial(ring.field, ring.nvars, terms)


def random_basis_change(module: GradedFreeModule, rng: np.random.Generator) -> GradedMatrix:
    '''
    A random homogeneous automorphism of a graded free module: the identity plus random entries of degree
    d_j - d_i >= 0 above the diagonal. It is unipotent, hence invertible.
    '''
    ring = module.ring
    degrees = module.degrees
    entries = {(i, i): ring.one() for i in range(module.rank)}
    for i in range(module.rank):
        for j in range(i + 1, module.rank):
            p = random_homogeneous(ring, degrees[j] - degrees[i], rng)
            if not p.is_zero():
                entries[(i, j)] = p
    return GradedMatrix(module, module, entries, normalize=False)


def check_minors_in_mr(A: GradedMatrix, r) -> LawCheck:
    '''
    Check that every r x r minor of A lies in m^r, i.e. has no component of degree below r.
    This holds for every minimal A.
    '''
    for rows, cols, minor in all_minors(A, r):
        if minor.degree < r:
            return LawCheck('minors_in_mr', False, 'minor on rows %s, columns %s is %s, of degree %i < %i'
                            % (list(rows), list(cols), A.ring.format(minor), minor.degree, r))
    return LawCheck('minors_in_mr', True, 'every %i x %i minor of a %i x %i matrix lies in m^%i'
                    % (r, r, A.nrows, A.ncols, r))


def check_tensor_embedding(A: GradedMatrix, ell, B: GradedMatrix, rows: Sequence[int], cols: Sequence[int]):
    '''
    Raise BadEmbeddingError unless the submatrix of B on `rows` and `cols` is A (x) id_ell,
    i.e. block diagonal with ell copies of A.
    '''
    m, n = A.shape
    if len(rows) != ell * m or len(cols) != ell * n:
        raise BadEmbeddingError('%i rows and %i columns cannot hold %i copies of a %i x %i matrix'
                                % (len(rows), len(cols), ell, m, n))
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise BadEmbeddingError('Embedding indices are repeated')
    for a in range(ell * m):
        for b in range(ell * n):
            expected = A.entry(a % m, b % n) if a // m == b // n else A.ring.zero()
            if B.entry(rows[a], cols[b]) != expected:
                raise BadEmbeddingError('Entry (%i, %i) of B is %s, expected %s'
                                        % (rows[a], cols[b], B.ring.format(B.entry(rows[a], cols[b])),
                                           A.ring.format(expected)))


def check_tensor_submatrix_law(A: GradedMatrix, ell, B: GradedMatrix, composition: Sequence[int],
                               rows: Optional[Sequence[int]] = None,
                               cols: Optional[Sequence[int]] = None) -> LawCheck:
    '''
    If A (x) id_ell is a submatrix of B, then I_{r_1}(A) ... I_{r_ell}(A) is contained in I_r(B)
    for every composition r_1 + ... + r_ell = r.

    Parameters
    ----------
    A : GradedMatrix
    ell : int
    B : GradedMatrix
    composition : list of int
        One part per copy of A
    rows : list of int, optional
        Rows of B holding the copies. Default is the leading ell * rows(A) rows
    cols : list of int, optional
        Columns of B holding the copies. Default is the leading ell * cols(A) columns

    Raises
    ------
    BadEmbeddingError
    '''
    if len(composition) != ell:
        raise ValueError('Composition %s needs %i parts' % (list(composition), ell))
    if A.ring is not B.ring:
        raise RankMismatchError('A and B must be over the same ring')
    rows = list(range(ell * A.nrows)) if rows is None else list(rows)
    cols = list(range(ell * A.ncols)) if cols is None else list(cols)
    check_tensor_embedding(A, ell, B, rows, cols)
    r = sum(composition)
    factors = [minors_ideal(A, ri, full=True).ideal for ri in composition]
    lhs = product_ideal(A.ring, factors)
    rhs = minors_ideal(B, r, full=True).ideal
    comparison = ideal_compare(lhs, rhs)
    passed = comparison.relation in (IdealComparison.EQUAL, IdealComparison.A_PROPER_IN_B)
    if passed:
        detail = 'product over composition %s is %s, inside I_%i(B) = %s' % (
            list(composition), lhs.format(), r, rhs.format())
    else:
        detail = 'product over composition %s has %s outside I_%i(B) = %s' % (
            list(composition), A.ring.format(comparison.witness_a), r, rhs.format())
    return LawCheck('tensor_submatrix', passed, detail)


def border_tensor(A: GradedMatrix, ell, rng: np.random.Generator, extra_rows=1, extra_cols=1
                  ) -> Tuple[GradedMatrix, list, list]:
    '''
    A matrix B containing A (x) id_ell in its leading rows and columns, bordered by random homogeneous entries.

    Returns
    -------
    B : GradedMatrix
    rows : list of int
    cols : list of int
    '''
    ring = A.ring
    core = A.tensor_identity([0] * ell)
    tdeg = list(core.target.degrees)
    sdeg = list(core.source.degrees)
    low = min(tdeg, default=0)
    high = max(sdeg, default=low) + 1
    tdeg_all = tdeg + [low] * extra_rows
    sdeg_all = sdeg + [high] * extra_cols
    entries = dict(core.entries)
    for i, ti in enumerate(tdeg_all):
        for j, sj in enumerate(sdeg_all):
            if i < len(tdeg) and j < len(sdeg):
                continue
            p = random_homogeneous(ring, sj - ti, rng, density=0.7)
            if not p.is_zero():
                entries[(i, j)] = p
    B = GradedMatrix(GradedFreeModule(ring, sdeg_all), GradedFreeModule(ring, tdeg_all), entries, normalize=False)
    return B, list(range(len(tdeg))), list(range(len(sdeg)))


def check_basis_change_invariance(A: GradedMatrix, r, rng: np.random.Generator) -> LawCheck:
    '''
    Check that I_r(U A V) = I_r(A) for random homogeneous automorphisms U and V.
    '''
    U = random_basis_change(A.target, rng)
    V = random_basis_change(A.source, rng)
    changed = U.compose(A.compose(V))
    before = minors_ideal(A, r, full=True).ideal
    after = minors_ideal(changed, r, full=True).ideal
    comparison = ideal_compare(before, after)
    passed = comparison.relation == IdealComparison.EQUAL
    return LawCheck('basis_change', passed, 'I_%i before %s, after %s' % (r, before.format(), after.format()))


def _step_ideal(res: Resolution, n, r) -> GradedIdeal:
    if n > res.length:
        if not res.terminated:
            raise ValueError('Step %i is not computed' % n)
        return GradedIdeal.zero(res.ring)
    return minors_ideal(res.differential(n), r, full=True).ideal


def check_summand_inclusion(resM: Resolution, resN: Resolution, n, m, r) -> LawCheck:
    '''
    If N is a direct summand of the n-th syzygy of M, then I_{m,r}(N) is contained in I_{n+m,r}(M).
    The caller constructs N with this property.
    '''
    if m < 1:
        raise ValueError('Step m must be at least 1')
    small = _step_ideal(resN, m, r)
    large = _step_ideal(resM, n + m, r)
    comparison = ideal_compare(small, large)
    passed = comparison.relation in (IdealComparison.EQUAL, IdealComparison.A_PROPER_IN_B)
    if passed:
        detail = 'I_{%i,%i}(N) = %s inside I_{%i,%i}(M) = %s' % (m, r, small.format(), n + m, r, large.format())
    else:
        detail = 'I_{%i,%i}(N) has %s outside I_{%i,%i}(M) = %s' % (
            m, r, resN.ring.format(comparison.witness_a), n + m, r, large.format())
    return LawCheck('summand_inclusion', passed, detail)
