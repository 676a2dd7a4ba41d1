from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from mintk.arith import EchelonBasis, rref
from mintk.arith.linalg import free_columns
from mintk.errors import CapTooLowError, TrackingLostError
from mintk.utils import chunked
from .module import GradedFreeModule, GradedMatrix, SparseVector
from .minimalize import _span_of_multiples

#: Degrees beyond the top generator degree searched for kernel generators over non-artinian rings
DEFAULT_DEGREE_SLACK = 2
#: Number of multiples reduced together when testing whether a kernel is already generated
DEFAULT_BATCH_SIZE = 512


def default_cap(module: GradedFreeModule, ring, degree_slack=DEFAULT_DEGREE_SLACK):
    '''
    Degree through which kernel generators of a map out of `module` are searched by default.

    For an artinian ring with top degree h, no minimal kernel generator of a map out of F can have
    degree above maxdeg(F) + h, so this cap is sufficient.
    Otherwise the search stops `degree_slack` degrees above the top generator.
    '''
    if module.rank == 0:
        return 0
    if ring.is_artinian:
        return module.max_degree + ring.artinian_top
    return module.max_degree + degree_slack


def kernel_generators(A: GradedMatrix, degree_cap, preferred: Optional[Sequence[SparseVector]] = None,
                      preferred_degrees: Optional[Sequence[int]] = None,
                      batch_size=DEFAULT_BATCH_SIZE) -> Tuple[List[Tuple[int, SparseVector]], List[int]]:
    '''
    Minimal generators of ker A through `degree_cap`, degree by degree.

    In degree d the kernel is the right kernel of the dense degree-d matrix. A kernel vector is determined by
    its coordinates at the free (non-pivot) columns, so the span of m * (generators of lower degree) is
    tracked in those coordinates. New generators are the kernel basis vectors of the free columns that
    complete that span, which keeps them sparse.

    Returns
    -------
    gens : list of (int, sparse vector)
        Degree and coordinates in the source of A of every generator, sorted by degree
    preferred_positions : list of int
        Position of each preferred vector in `gens`

    Raises
    ------
    TrackingLostError
        If a preferred vector is not in the kernel or is not independent of the generators before it
    '''
    ring = A.ring
    field = ring.field
    F = A.source
    preferred = list(preferred or [])
    preferred_degrees = list(preferred_degrees or [])
    gens: List[Tuple[int, SparseVector]] = []
    pref_pos = {}
    if F.rank == 0:
        if preferred:
            raise TrackingLostError('Designated elements given for a map out of the zero module')
        return gens, []

    for d in range(F.min_degree, degree_cap + 1):
        n = F.dim(d)
        prefs = [(k, v) for k, (v, dv) in enumerate(zip(preferred, preferred_degrees)) if dv == d]
        if n == 0:
            if prefs:
                raise TrackingLostError('Designated element in degree %i where the module vanishes' % d)
            continue
        Ad = A.degree_matrix(d)
        if Ad.shape[0] and np.any(Ad != 0):
            R, pivots = rref(Ad, field)
        else:
            R, pivots = field.zeros((0, n)), []
        free = free_columns(pivots, n)
        kdim = len(free)
        if kdim == 0:
            if prefs:
                raise TrackingLostError('Designated element of degree %i but the kernel vanishes there' % d)
            continue
        free_pos = np.full(n, -1, dtype=np.int64)
        free_pos[free] = np.arange(kdim)

        def coords(vec):
            arr = field.zeros(kdim)
            for idx, c in vec.items():
                q = free_pos[idx]
                if q >= 0:
                    arr[q] = c
            return arr

        basis = EchelonBasis(kdim, field)
        for batch in chunked(_span_of_multiples(F, gens, d), batch_size):
            basis.extend(np.array([coords(v) for v in batch], dtype=field.dtype))
            if basis.is_full():
                break
        for k, vec in prefs:
            if A.apply_sparse(vec, d):
                raise TrackingLostError('Designated element %i of degree %i is not in the kernel' % (k, d))
            if not basis.add(coords(vec)):
                raise TrackingLostError('Designated element %i of degree %i is not a minimal generator' % (k, d))
            pref_pos[k] = len(gens)
            gens.append((d, dict(vec)))
        for q in basis.complement():
            f = free[q]
            vec = {f: field.one}
            if R.shape[0]:
                for i in np.flatnonzero(R[:, f] != 0):
                    vec[pivots[i]] = field.neg(field.coerce(R[i, f]))
            gens.append((d, vec))
    missing = [k for k in range(len(preferred)) if k not in pref_pos]
    if missing:
        raise TrackingLostError('Designated elements %s lie above the degree cap %i' % (missing, degree_cap))
    return gens, [pref_pos[k] for k in range(len(preferred))]


def generators_to_matrix(A: GradedMatrix, gens) -> GradedMatrix:
    '''
    The matrix whose columns are the given sparse elements of the source of A.
    '''
    F = A.source
    source = GradedFreeModule(A.ring, [d for d, _ in gens])
    entries = {}
    for j, (d, vec) in enumerate(gens):
        for i, poly in F.sparse_to_column(vec, d).items():
            entries[(i, j)] = poly
    return GradedMatrix(source, F, entries, normalize=False)


def syzygy_step(A: GradedMatrix, degree_cap, preferred=None, preferred_degrees=None,
                batch_size=DEFAULT_BATCH_SIZE):
    '''
    Next differential of a resolution: a matrix B with image(B) = ker(A) through `degree_cap`.

    The columns of B are minimal generators of the kernel, so B is minimal when the kernel lies in m * F,
    which holds whenever A is minimal.

    Parameters
    ----------
    A : GradedMatrix
    degree_cap : int
        Must be at least the largest source degree of A
    preferred : list of sparse vectors, optional
        Kernel elements that must appear as generators. They come first within their degree
    preferred_degrees : list of int, optional
    batch_size : int

    Returns
    -------
    B : GradedMatrix
    preferred_columns : list of int
        Only returned if `preferred` is given

    Raises
    ------
    CapTooLowError
        If `degree_cap` is below the largest source degree of A
    '''
    if A.source.rank and degree_cap < A.source.max_degree:
        raise CapTooLowError('Degree cap %i is below the top source degree %i'
                             % (degree_cap, A.source.max_degree), suggested_cap=default_cap(A.source, A.ring))
    gens, positions = kernel_generators(A, degree_cap, preferred, preferred_degrees, batch_size)
    B = generators_to_matrix(A, gens)
    if preferred:
        return B, positions
    return B
