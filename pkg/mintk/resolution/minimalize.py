from typing import List, Optional, Sequence

import numpy as np

from mintk import logger
from mintk.arith import EchelonBasis
from mintk.arith import monomial as mono
from mintk.errors import TrackingLostError
from .module import GradedFreeModule, GradedMatrix, SparseVector


def minimalize(A: GradedMatrix) -> GradedMatrix:
    '''
    Remove unit entries by Gaussian elimination, giving a minimal presentation of the same cokernel.

    Each unit entry c at (i, j) is cleared by the Schur complement A' = A - col_j * row_i / c,
    after which row i and column j are dropped. The remaining rows and columns keep their order.

    Parameters
    ----------
    A : GradedMatrix

    Returns
    -------
    A_min : GradedMatrix
        All entries in the maximal ideal
    '''
    ring = A.ring
    field = ring.field
    entries = dict(A.entries)
    rows = set(range(A.nrows))
    cols = set(range(A.ncols))
    n_removed = 0
    while True:
        units = sorted(((i, j) for (i, j), p in entries.items() if p.degree == 0), key=lambda t: (t[1], t[0]))
        if not units:
            break
        i0, j0 = units[0]
        c_inv = field.inv(entries[(i0, j0)].lead_coefficient)
        col = {i: p for (i, j), p in entries.items() if j == j0 and i != i0}
        row = {j: p for (i, j), p in entries.items() if i == i0 and j != j0}
        entries = {(i, j): p for (i, j), p in entries.items() if i != i0 and j != j0}
        for i, a in col.items():
            for j, b in row.items():
                value = entries.get((i, j), ring.zero()) - ring.mul(a, b).scale(c_inv)
                if value.is_zero():
                    entries.pop((i, j), None)
                else:
                    entries[(i, j)] = value
        rows.discard(i0)
        cols.discard(j0)
        n_removed += 1
    if n_removed == 0:
        return A
    rows = sorted(rows)
    cols = sorted(cols)
    rpos = {i: k for k, i in enumerate(rows)}
    cpos = {j: k for k, j in enumerate(cols)}
    source = GradedFreeModule(ring, [A.source.degrees[j] for j in cols])
    target = GradedFreeModule(ring, [A.target.degrees[i] for i in rows])
    new_entries = {(rpos[i], cpos[j]): p for (i, j), p in entries.items()}
    return GradedMatrix(source, target, new_entries, normalize=False)


def _span_of_multiples(module: GradedFreeModule, gens, d):
    '''
    Sparse vectors u * g of degree d for generators g = (degree, sparse vector) of lower degree.
    '''
    ring = module.ring
    for dg, vec in gens:
        if dg >= d:
            continue
        for u in ring.standard_monomials(d - dg):
            image = module.multiply_sparse(vec, dg, u)
            if image:
                yield image


def select_minimal_columns(A: GradedMatrix, preferred: Optional[Sequence[SparseVector]] = None,
                           preferred_degrees: Optional[Sequence[int]] = None):
    '''
    Choose a minimal generating set of the column span of A among its columns.

    A column is kept if its image is not in the span of m times the kept columns of lower degree plus the
    kept columns of its own degree. Preferred elements of the column span, given as sparse vectors of the
    target, are inserted first in their degree and become the leading columns of that degree.

    Parameters
    ----------
    A : GradedMatrix
    preferred : list of sparse vectors, optional
    preferred_degrees : list of int, optional
        Degree of each preferred vector

    Returns
    -------
    A_min : GradedMatrix
        Columns sorted by degree
    preferred_columns : list of int
        Only returned if `preferred` is given. Column index of each preferred vector in `A_min`

    Raises
    ------
    TrackingLostError
        If a preferred vector is not a minimal generator of the column span
    '''
    ring = A.ring
    field = ring.field
    target = A.target
    preferred = list(preferred or [])
    preferred_degrees = list(preferred_degrees or [])
    by_degree = {}
    for j, d in enumerate(A.source.degrees):
        by_degree.setdefault(d, []).append(('col', j))
    for k, d in enumerate(preferred_degrees):
        by_degree.setdefault(d, []).insert(sum(1 for t, _ in by_degree[d] if t == 'pref'), ('pref', k))

    kept = []  # (degree, sparse vector)
    pref_pos = {}
    for d in sorted(by_degree):
        n = target.dim(d)
        basis = EchelonBasis(n, field)
        for image in _span_of_multiples(target, kept, d):
            basis.add(target.to_dense(image, d))
        for kind, idx in by_degree[d]:
            if kind == 'pref':
                vec = preferred[idx]
            else:
                vec = target.column_to_sparse(A.column(idx), d)
            if basis.add(target.to_dense(vec, d)):
                if kind == 'pref':
                    pref_pos[idx] = len(kept)
                kept.append((d, vec))
            elif kind == 'pref':
                raise TrackingLostError('Designated element %i of degree %i is not a minimal generator' % (idx, d))
    source = GradedFreeModule(ring, [d for d, _ in kept])
    entries = {}
    for j, (d, vec) in enumerate(kept):
        for i, poly in target.sparse_to_column(vec, d).items():
            entries[(i, j)] = poly
    result = GradedMatrix(source, target, entries, normalize=False)
    if len(kept) < A.ncols:
        logger.debug('Dropped %i redundant columns' % (A.ncols - len(kept)))
    if preferred:
        return result, [pref_pos[k] for k in range(len(preferred))]
    return result
