'''
Dense exact linear algebra over a Field on numpy arrays.

Prime fields use int64 arrays holding representatives in [0, p), so any product of two entries fits.
The rationals use object arrays of Fraction.
Vectors are rows throughout: a kernel basis is returned as the rows of a matrix.
'''

from typing import List, Tuple

import numpy as np

from .field import Field

#: Largest integer magnitude a float64 product sum represents exactly
_FLOAT_EXACT = 2 ** 53


def rref(A, field: Field) -> Tuple[np.ndarray, List[int]]:
    '''
    Reduced row echelon form.

    Parameters
    ----------
    A : np.ndarray
        2-D array over `field`. It is not modified
    field : Field

    Returns
    -------
    R : np.ndarray
        The nonzero rows of the reduced row echelon form
    pivots : list of int
        Pivot column of each row of `R`
    '''
    A = field.normalize(np.array(A, dtype=field.dtype, copy=True))
    if A.ndim != 2:
        raise ValueError('rref expects a 2-D array')
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c] != 0)
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = field.normalize(A[r] * field.inv(A[r, c]))
        others = np.flatnonzero(A[:, c] != 0)
        others = others[others != r]
        if others.size:
            A[others] = field.normalize(A[others] - np.outer(A[others, c], A[r]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(A, field: Field) -> int:
    if A.shape[0] == 0 or A.shape[1] == 0:
        return 0
    return len(rref(A, field)[1])


def free_columns(pivots, n) -> List[int]:
    piv = set(pivots)
    return [j for j in range(n) if j not in piv]


def nullspace(A, field: Field) -> np.ndarray:
    '''
    Basis of the right kernel {v : A v = 0}, one vector per row.

    The basis vector of free column f has a 1 at f, zeros at the other free columns
    and minus column f of the reduced form at the pivot columns.
    '''
    m, n = A.shape
    if m == 0:
        return field.identity(n)
    R, pivots = rref(A, field)
    free = free_columns(pivots, n)
    K = field.zeros((len(free), n))
    for k, f in enumerate(free):
        K[k, f] = field.one
    if pivots and free:
        K[:, pivots] = field.normalize(-R[:, free].T)
    return K


def matmul(A, B, field: Field) -> np.ndarray:
    '''
    Exact matrix product over the field.

    For prime fields the product is computed in float64 through BLAS when every partial sum stays below 2^53,
    and in chunks of int64 products otherwise.
    '''
    if field.dtype == object:
        if A.shape[1] == 0:
            return field.zeros((A.shape[0], B.shape[1]))
        return A.dot(B)
    k = A.shape[1]
    if k == 0:
        return field.zeros((A.shape[0], B.shape[1]))
    p = field.characteristic
    bound = (p - 1) ** 2
    if k * bound < _FLOAT_EXACT:
        C = A.astype(np.float64) @ B.astype(np.float64)
        return np.mod(np.rint(C).astype(np.int64), p)
    step = max(1, (2 ** 62) // bound)
    C = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for s in range(0, k, step):
        C = np.mod(C + A[:, s:s + step] @ B[s:s + step], p)
    return C


class EchelonBasis:
    '''
    A subspace of field^ncols kept as a fully reduced row echelon basis, for span membership queries.

    Each pivot column holds a single 1 among the rows, so reducing a vector against the basis is
    one matrix product.

    Parameters
    ----------
    ncols : int
    field : Field

    Attributes
    ----------
    rows : np.ndarray
    pivots : list of int
    '''

    def __init__(self, ncols, field: Field):
        self.ncols = ncols
        self.field = field
        self.rows = field.zeros((0, ncols))
        self.pivots = []

    @classmethod
    def from_rows(cls, rows, field: Field, ncols=None):
        rows = np.asarray(rows, dtype=field.dtype)
        if ncols is None:
            ncols = rows.shape[1]
        basis = cls(ncols, field)
        if rows.size:
            basis.extend(rows.reshape(-1, ncols))
        return basis

    @property
    def rank(self):
        return len(self.pivots)

    def is_full(self):
        return self.rank == self.ncols

    def reduce(self, V):
        '''
        Reduce rows of V modulo the subspace. Accepts one vector or a 2-D stack.
        '''
        V = np.asarray(V, dtype=self.field.dtype)
        single = V.ndim == 1
        if single:
            V = V[None, :]
        if self.pivots:
            V = self.field.normalize(V - matmul(V[:, self.pivots], self.rows, self.field))
        else:
            V = self.field.normalize(V.copy())
        return V[0] if single else V

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v) != 0)

    def add(self, v) -> bool:
        '''
        Insert one vector.

        Returns
        -------
        independent : bool
            False if `v` already lies in the subspace
        '''
        field = self.field
        w = self.reduce(v)
        nz = np.flatnonzero(w != 0)
        if nz.size == 0:
            return False
        c = int(nz[0])
        w = field.normalize(w * field.inv(w[c]))
        if self.pivots:
            self.rows = field.normalize(self.rows - np.outer(self.rows[:, c], w))
        self.rows = np.vstack([self.rows, w[None, :]])
        self.pivots.append(c)
        return True

    def extend(self, V) -> int:
        '''
        Insert a stack of vectors at once.

        Returns
        -------
        n_new : int
            The increase of the dimension
        '''
        V = np.asarray(V, dtype=self.field.dtype)
        if V.shape[0] == 0:
            return 0
        W = self.reduce(V)
        R, new_pivots = rref(W, self.field)
        if not new_pivots:
            return 0
        if self.pivots:
            self.rows = self.field.normalize(self.rows - matmul(self.rows[:, new_pivots], R, self.field))
        self.rows = np.vstack([self.rows, R])
        self.pivots.extend(new_pivots)
        return len(new_pivots)

    def complement(self) -> List[int]:
        '''
        Coordinates not used as pivots. The unit vectors at these coordinates complete the basis of the whole space.
        '''
        return free_columns(self.pivots, self.ncols)
