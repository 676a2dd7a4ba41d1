from typing import Dict, Tuple

import numpy as np

from mintk import logger
from mintk.arith import Polynomial, nullspace
from mintk.arith import monomial as mono
from mintk.errors import HypothesisViolatedError, NotMinimalError, SelfCheckError
from mintk.resolution import GradedFreeModule, GradedMatrix
from .ring import StretchedGorensteinRing


def residue_matrix(A: GradedMatrix, ring: StretchedGorensteinRing, cols) -> np.ndarray:
    '''
    Coefficients of x_e in the linear entries of the given columns.

    This is the image of those columns in m R^m / (x_1, .., x_{e-1}, x_e^2) R^m, which is a k-vector space of
    dimension m. Entries of degree two or more lie in m^2 and vanish there.
    '''
    field = ring.field
    xe = mono.unit(ring.nvars, ring.index(ring.e))
    mat = field.zeros((A.nrows, len(cols)))
    for k, j in enumerate(cols):
        for i, poly in A.column(j).items():
            if poly.degree == 1:
                mat[i, k] = poly.coefficient(xe)
    return mat


def _residue_free_column(A: GradedMatrix, ring: StretchedGorensteinRing):
    field = ring.field
    xe = mono.unit(ring.nvars, ring.index(ring.e))
    for j in range(A.ncols):
        column = A.column(j)
        if column and all(p.degree > 1 or field.is_zero(p.coefficient(xe)) for p in column.values()):
            return j
    return None


def _column_combination(A: GradedMatrix, ring: StretchedGorensteinRing) -> Tuple[int, Dict[int, Polynomial]]:
    field = ring.field
    groups = {}
    for j, d in enumerate(A.source.degrees):
        groups.setdefault(d, []).append(j)
    for d in sorted(groups):
        # m + 1 columns of one degree already have dependent residues
        cols = groups[d][:A.nrows + 1]
        K = nullspace(residue_matrix(A, ring, cols), field)
        if len(K):
            break
    else:
        # the residue matrices have total rank at most m < n, so some degree has a kernel
        raise SelfCheckError('No degree of the column residues has a kernel')

    # the last basis vector has a 1 at the largest free column and zeros at the other free columns
    vec = K[-1]
    support = np.flatnonzero(vec != 0)
    combination = {}
    for k in support:
        c = field.coerce(vec[k])
        for i, poly in A.column(cols[k]).items():
            term = poly.scale(c)
            combination[i] = combination[i] + term if i in combination else term
    logger.debug('Combined %i columns of degree %i' % (len(support), d))
    return cols[int(support.max())], combination


def find_annihilated_generator(A: GradedMatrix, ring: StretchedGorensteinRing) -> Tuple[GradedMatrix, int]:
    '''
    Change the basis of the source of a minimal A so that its last column u satisfies x_e * u = 0.

    A column whose entries already lie in (x_1, .., x_{e-1}, x_e^2) is simply moved to the end.
    Otherwise, since a degree-preserving column operation can only combine columns of the same degree with
    scalars up to terms in m^2, the first degree whose residue matrix has a kernel is used: the kernel vector of
    the largest free column gives a combination in (x_1, .., x_{e-1}, x_e^2) R^m, which replaces that column.

    Parameters
    ----------
    A : GradedMatrix
        Minimal, with more columns than rows
    ring : StretchedGorensteinRing

    Returns
    -------
    A_new : GradedMatrix
        A times an invertible matrix
    index : int
        The column killed by x_e, always A.ncols - 1

    Raises
    ------
    HypothesisViolatedError
        If A does not have more columns than rows, or the ring is not a stretched Gorenstein ring
    NotMinimalError
        If A has a unit entry, or columns of one degree combine to zero
    '''
    if not isinstance(ring, StretchedGorensteinRing) or A.ring is not ring:
        raise HypothesisViolatedError('The matrix must be over a stretched Gorenstein ring')
    if A.ncols <= A.nrows:
        raise HypothesisViolatedError('Need more columns than rows, got a %i x %i matrix' % A.shape)
    if not A.is_minimal():
        i, j = A.unit_entries()[0]
        raise NotMinimalError('Entry (%i, %i) is a unit' % (i, j))

    target = _residue_free_column(A, ring)
    if target is not None:
        combination = A.column(target)
    else:
        target, combination = _column_combination(A, ring)

    last = A.ncols - 1
    # a transposition is its own inverse
    order = list(range(A.ncols))
    order[target], order[last] = order[last], order[target]
    entries = {(i, order[j]): poly for (i, j), poly in A.entries.items() if j != target}
    for i, poly in combination.items():
        entries[(i, last)] = poly
    source = GradedFreeModule(ring, [A.source.degrees[j] for j in order])
    A_new = GradedMatrix(source, A.target, entries)

    xe = ring.x(ring.e)
    if not A_new.column(last):
        # a vanishing combination of columns of one degree
        raise NotMinimalError('Columns of degree %i are linearly dependent, so A is not minimal'
                              % A.source.degrees[target])
    for i, poly in A_new.column(last).items():
        if not ring.reduces_to_zero(xe * poly):
            raise SelfCheckError('x%i does not kill entry %i of the chosen column' % (ring.e, i))
    return A_new, last
