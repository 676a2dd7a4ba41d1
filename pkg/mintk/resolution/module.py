from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from mintk.arith import Polynomial
from mintk.arith import monomial as mono
from mintk.errors import NonHomogeneousError, RankMismatchError
from mintk.ring import RingPresentation

#: Sparse vector of a free module in a fixed degree: map from basis index to nonzero coefficient
SparseVector = Dict[int, object]


class GradedFreeModule:
    '''
    A graded free module R(-d_1) + ... + R(-d_n).

    Its degree-d component has the basis of pairs (j, u) with u a standard monomial of degree d - d_j,
    ordered by j and then by descending degrevlex. Vectors in a fixed degree are sparse dicts over this basis
    or dense numpy rows.

    Parameters
    ----------
    ring : RingPresentation
    degrees : list of int
        Degrees of the basis elements
    '''

    def __init__(self, ring: RingPresentation, degrees: Sequence[int]):
        self.ring = ring
        self.degrees = tuple(int(d) for d in degrees)
        self._basis = {}
        self._index = {}

    def __repr__(self):
        return '<GradedFreeModule: rank %i, degrees %s>' % (self.rank, list(self.degrees))

    def __eq__(self, other):
        return isinstance(other, GradedFreeModule) and other.ring is self.ring and other.degrees == self.degrees

    def __hash__(self):
        return hash((id(self.ring), self.degrees))

    @property
    def rank(self):
        return len(self.degrees)

    @property
    def min_degree(self):
        return min(self.degrees) if self.degrees else None

    @property
    def max_degree(self):
        return max(self.degrees) if self.degrees else None

    def basis(self, d) -> List[Tuple[int, tuple]]:
        cached = self._basis.get(d)
        if cached is None:
            cached = [(j, u) for j, dj in enumerate(self.degrees) for u in self.ring.standard_monomials(d - dj)]
            self._basis[d] = cached
        return cached

    def index(self, d) -> Dict[Tuple[int, tuple], int]:
        cached = self._index.get(d)
        if cached is None:
            cached = {b: i for i, b in enumerate(self.basis(d))}
            self._index[d] = cached
        return cached

    def dim(self, d) -> int:
        return sum(self.ring.hilbert_function(d - dj) for dj in self.degrees)

    def shift(self, s) -> 'GradedFreeModule':
        '''
        The same module with every basis degree raised by `s`.
        '''
        return GradedFreeModule(self.ring, [d + s for d in self.degrees])

    def dual(self, s) -> 'GradedFreeModule':
        '''
        Hom(F, R) with degrees s - d_j, i.e. the dual shifted by `s` so that degrees stay non-negative.
        '''
        return GradedFreeModule(self.ring, [s - d for d in self.degrees])

    def direct_sum(self, *others) -> 'GradedFreeModule':
        degrees = list(self.degrees)
        for other in others:
            degrees.extend(other.degrees)
        return GradedFreeModule(self.ring, degrees)

    def multiply_sparse(self, vec: SparseVector, d, u) -> SparseVector:
        '''
        Multiply a sparse vector of degree d by the monomial u.
        '''
        ring = self.ring
        field = ring.field
        basis = self.basis(d)
        target = self.index(d + sum(u))
        out = {}
        for idx, c in vec.items():
            j, m = basis[idx]
            for sm, sc in ring.nf_monomial(mono.mul(u, m)).items():
                k = target[(j, sm)]
                v = field.add(out.get(k, field.zero), field.mul(c, sc))
                if field.is_zero(v):
                    out.pop(k, None)
                else:
                    out[k] = v
        return out

    def to_dense(self, vec: SparseVector, d) -> np.ndarray:
        arr = self.ring.field.zeros(self.dim(d))
        for idx, c in vec.items():
            arr[idx] = c
        return arr

    def from_dense(self, arr, d) -> SparseVector:
        field = self.ring.field
        return {int(i): field.coerce(arr[i]) for i in np.flatnonzero(arr != 0)}

    def column_to_sparse(self, column: Dict[int, Polynomial], d) -> SparseVector:
        '''
        Coordinates of an element given as {component: polynomial} with all terms of total degree d.
        '''
        index = self.index(d)
        field = self.ring.field
        out = {}
        for j, poly in column.items():
            for m, c in self.ring.normal_form(poly).terms.items():
                k = index[(j, m)]
                out[k] = field.add(out.get(k, field.zero), c)
        return {k: v for k, v in out.items() if not field.is_zero(v)}

    def sparse_to_column(self, vec: SparseVector, d) -> Dict[int, Polynomial]:
        ring = self.ring
        basis = self.basis(d)
        terms = {}
        for idx, c in vec.items():
            j, m = basis[idx]
            terms.setdefault(j, {})[m] = c
        return {j: Polynomial._raw(ring.field, ring.nvars, t) for j, t in sorted(terms.items())}

    def format_element(self, column: Dict[int, Polynomial]) -> str:
        if not column:
            return '0'
        return ' + '.join('(%s)*e%i' % (self.ring.format(p), j + 1) for j, p in sorted(column.items()))


class GradedMatrix:
    '''
    A degree-preserving map of graded free modules, stored as a sparse dict of homogeneous polynomial entries.

    Entry (i, j) maps basis element j of the source to the target and has degree source_j - target_i.

    Parameters
    ----------
    source : GradedFreeModule
    target : GradedFreeModule
    entries : dict of (int, int) -> Polynomial
    normalize : bool
        Reduce entries to normal form and drop zeros. Set False only for entries known to be normal

    Raises
    ------
    NonHomogeneousError
        If an entry is not homogeneous of the degree the modules require
    '''

    def __init__(self, source: GradedFreeModule, target: GradedFreeModule,
                 entries: Optional[Dict[Tuple[int, int], Polynomial]] = None, normalize=True):
        if source.ring is not target.ring:
            raise ValueError('Source and target of a matrix must be over the same ring')
        self.source = source
        self.target = target
        ring = source.ring
        self._entries = {}
        for (i, j), poly in (entries or {}).items():
            if not (0 <= i < target.rank and 0 <= j < source.rank):
                raise RankMismatchError('Entry (%i, %i) outside a %i x %i matrix' % (i, j, target.rank, source.rank))
            if normalize:
                poly = ring.normal_form(poly)
            if poly.is_zero():
                continue
            expected = source.degrees[j] - target.degrees[i]
            if not poly.is_homogeneous() or poly.degree != expected:
                raise NonHomogeneousError('Entry (%i, %i) = %s should be homogeneous of degree %i'
                                          % (i, j, ring.format(poly), expected))
            self._entries[(i, j)] = poly
        self._columns = None

    @property
    def ring(self) -> RingPresentation:
        return self.source.ring

    @property
    def nrows(self):
        return self.target.rank

    @property
    def ncols(self):
        return self.source.rank

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def entries(self) -> Dict[Tuple[int, int], Polynomial]:
        return self._entries

    def __repr__(self):
        return '<GradedMatrix: %i x %i>' % self.shape

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self._entries == other._entries

    def entry(self, i, j) -> Polynomial:
        poly = self._entries.get((i, j))
        return poly if poly is not None else self.ring.zero()

    def columns(self) -> Dict[int, Dict[int, Polynomial]]:
        if self._columns is None:
            cols = {}
            for (i, j), poly in sorted(self._entries.items(), key=lambda t: (t[0][1], t[0][0])):
                cols.setdefault(j, {})[i] = poly
            self._columns = cols
        return self._columns

    def column(self, j) -> Dict[int, Polynomial]:
        return self.columns().get(j, {})

    def is_zero(self):
        return not self._entries

    def unit_entries(self) -> List[Tuple[int, int]]:
        return sorted(((i, j) for (i, j), poly in self._entries.items() if poly.degree == 0),
                      key=lambda t: (t[1], t[0]))

    def is_minimal(self) -> bool:
        '''
        Whether every entry lies in the maximal ideal.
        '''
        return all(poly.degree >= 1 for poly in self._entries.values())

    def degree_matrix(self, d) -> np.ndarray:
        '''
        The k-linear map (F_source)_d -> (F_target)_d as a dense array with rows indexed by the target basis.
        '''
        ring = self.ring
        field = ring.field
        tindex = self.target.index(d)
        sbasis = self.source.basis(d)
        mat = field.zeros((len(tindex), len(sbasis)))
        if not tindex or not sbasis:
            return mat
        acc = {}
        for col, (j, u) in enumerate(sbasis):
            for i, poly in self.column(j).items():
                for m, c in poly.terms.items():
                    for sm, sc in ring.nf_monomial(mono.mul(u, m)).items():
                        key = (tindex[(i, sm)], col)
                        acc[key] = field.add(acc.get(key, field.zero), field.mul(c, sc))
        for (r, col), v in acc.items():
            mat[r, col] = v
        return mat

    def apply_sparse(self, vec: SparseVector, d) -> SparseVector:
        '''
        Image of a sparse source vector of degree d.
        '''
        ring = self.ring
        field = ring.field
        sbasis = self.source.basis(d)
        tindex = self.target.index(d)
        out = {}
        for idx, c in vec.items():
            j, u = sbasis[idx]
            for i, poly in self.column(j).items():
                for m, pc in poly.terms.items():
                    for sm, sc in ring.nf_monomial(mono.mul(u, m)).items():
                        k = tindex[(i, sm)]
                        out[k] = field.add(out.get(k, field.zero), field.mul(c, field.mul(pc, sc)))
        return {k: v for k, v in out.items() if not field.is_zero(v)}

    def compose(self, other: 'GradedMatrix') -> 'GradedMatrix':
        '''
        The product self * other, i.e. apply `other` first.

        Raises
        ------
        RankMismatchError
            If the target of `other` is not the source of `self`
        '''
        if other.target.degrees != self.source.degrees or other.ring is not self.ring:
            raise RankMismatchError('Cannot compose %s after %s' % (self, other))
        ring = self.ring
        acc = {}
        for k, col in other.columns().items():
            for j, b in col.items():
                for i, a in self.column(j).items():
                    acc.setdefault((i, k), []).append(a * b)
        entries = {}
        for key, products in acc.items():
            total = products[0]
            for p in products[1:]:
                total = total + p
            entries[key] = total
        return GradedMatrix(other.source, self.target, entries)

    def first_nonzero_entry(self):
        if not self._entries:
            return None
        return min(self._entries, key=lambda t: (t[1], t[0]))

    def transpose(self, shift) -> 'GradedMatrix':
        '''
        The dual map Hom(target, R) -> Hom(source, R), with both duals shifted by `shift`.
        '''
        entries = {(j, i): poly for (i, j), poly in self._entries.items()}
        return GradedMatrix(self.target.dual(shift), self.source.dual(shift), entries, normalize=False)

    def shift(self, s) -> 'GradedMatrix':
        return GradedMatrix(self.source.shift(s), self.target.shift(s), self._entries, normalize=False)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> 'GradedMatrix':
        rpos = {i: k for k, i in enumerate(rows)}
        cpos = {j: k for k, j in enumerate(cols)}
        source = GradedFreeModule(self.ring, [self.source.degrees[j] for j in cols])
        target = GradedFreeModule(self.ring, [self.target.degrees[i] for i in rows])
        entries = {(rpos[i], cpos[j]): poly for (i, j), poly in self._entries.items() if i in rpos and j in cpos}
        return GradedMatrix(source, target, entries, normalize=False)

    def tensor_identity(self, rest_degrees: Sequence[int]) -> 'GradedMatrix':
        '''
        The map A (x) id on F (x) P, where P has basis degrees `rest_degrees`.
        The basis of the tensor product runs fastest through the basis of F, so the result is block diagonal
        with one shifted copy of A per basis element of P.
        '''
        ring = self.ring
        m, n = self.shape
        sdeg, tdeg = [], []
        entries = {}
        for t, rd in enumerate(rest_degrees):
            sdeg.extend(d + rd for d in self.source.degrees)
            tdeg.extend(d + rd for d in self.target.degrees)
            for (i, j), poly in self._entries.items():
                entries[(i + t * m, j + t * n)] = poly
        return GradedMatrix(GradedFreeModule(ring, sdeg), GradedFreeModule(ring, tdeg), entries, normalize=False)

    def scale(self, c) -> 'GradedMatrix':
        field = self.ring.field
        c = field.coerce(c)
        return GradedMatrix(self.source, self.target, {k: p.scale(c) for k, p in self._entries.items()},
                            normalize=False)

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other: 'GradedMatrix') -> 'GradedMatrix':
        if other.source != self.source or other.target != self.target:
            raise RankMismatchError('Cannot add matrices between different modules')
        entries = dict(self._entries)
        for k, p in other._entries.items():
            entries[k] = entries[k] + p if k in entries else p
        return GradedMatrix(self.source, self.target, entries, normalize=False)

    def with_modules(self, source: GradedFreeModule, target: GradedFreeModule) -> 'GradedMatrix':
        '''
        Reinterpret the same entries between other modules with identical degrees.
        '''
        return GradedMatrix(source, target, self._entries, normalize=False)

    def change_ring(self, ring: RingPresentation, positions, source=None, target=None) -> 'GradedMatrix':
        '''
        Map every entry into `ring`, sending variable i to variable positions[i].
        '''
        source = source or GradedFreeModule(ring, self.source.degrees)
        target = target or GradedFreeModule(ring, self.target.degrees)
        entries = {k: p.embed(ring.nvars, positions) for k, p in self._entries.items()}
        return GradedMatrix(source, target, entries)

    def rows(self) -> List[List[Polynomial]]:
        return [[self.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def format(self) -> str:
        ring = self.ring
        if self.nrows == 0 or self.ncols == 0:
            return '[] (%i x %i)' % self.shape
        return '[' + '; '.join(', '.join(ring.format(p) for p in row) for row in self.rows()) + ']'

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, {})

    @classmethod
    def identity(cls, module: GradedFreeModule):
        one = module.ring.one()
        return cls(module, module, {(i, i): one for i in range(module.rank)}, normalize=False)

    @classmethod
    def from_rows(cls, ring: RingPresentation, rows, target_degrees: Sequence[int],
                  source_degrees: Optional[Sequence[int]] = None) -> 'GradedMatrix':
        '''
        Build a matrix from nested lists of polynomials or polynomial text.

        Parameters
        ----------
        ring : RingPresentation
        rows : list of list of Polynomial or str
        target_degrees : list of int
            Degree of each row
        source_degrees : list of int, optional
            Degree of each column. Inferred from the first nonzero entry of each column if omitted

        Raises
        ------
        RankMismatchError
            If the rows are ragged or a zero column has no declared degree
        NonHomogeneousError
        '''
        if len(rows) != len(target_degrees):
            raise RankMismatchError('%i rows but %i row degrees' % (len(rows), len(target_degrees)))
        ncols = len(rows[0]) if rows else (len(source_degrees) if source_degrees is not None else 0)
        if any(len(row) != ncols for row in rows):
            raise RankMismatchError('Rows of the matrix have different lengths')
        entries = {}
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                poly = ring.polynomial(value)
                if not poly.is_zero():
                    entries[(i, j)] = poly
        if source_degrees is None:
            source_degrees = []
            for j in range(ncols):
                nonzero = [(i, entries[(i, j)]) for i in range(len(rows)) if (i, j) in entries]
                if not nonzero:
                    raise RankMismatchError('Column %i is zero, its degree must be given' % j)
                i, poly = nonzero[0]
                if not poly.is_homogeneous():
                    raise NonHomogeneousError('Entry (%i, %i) is not homogeneous' % (i, j))
                source_degrees.append(target_degrees[i] + poly.degree)
        source = GradedFreeModule(ring, source_degrees)
        target = GradedFreeModule(ring, target_degrees)
        return cls(source, target, entries)

    @classmethod
    def from_blocks(cls, row_modules: Sequence[GradedFreeModule], col_modules: Sequence[GradedFreeModule],
                    blocks: Dict[Tuple[int, int], 'GradedMatrix'], source=None, target=None) -> 'GradedMatrix':
        '''
        Assemble a block matrix. Missing blocks are zero.
        '''
        ring = (row_modules or col_modules)[0].ring
        roff = np.cumsum([0] + [m.rank for m in row_modules]).tolist()
        coff = np.cumsum([0] + [m.rank for m in col_modules]).tolist()
        entries = {}
        for (bi, bj), block in blocks.items():
            if block.target.degrees != row_modules[bi].degrees or block.source.degrees != col_modules[bj].degrees:
                raise RankMismatchError('Block (%i, %i) does not match the declared modules' % (bi, bj))
            for (i, j), poly in block.entries.items():
                entries[(i + roff[bi], j + coff[bj])] = poly
        if source is None:
            source = GradedFreeModule(ring, [d for m in col_modules for d in m.degrees])
        if target is None:
            target = GradedFreeModule(ring, [d for m in row_modules for d in m.degrees])
        return cls(source, target, entries, normalize=False)


class ModulePresentation:
    '''
    A finitely generated graded module given as the cokernel of a matrix F_1 -> F_0.

    Parameters
    ----------
    matrix : GradedMatrix
        The presentation matrix; its target is the free module on the generators
    grading_shift : int
        Amount by which the internal degrees exceed the true degrees. Non-zero only for duals
    name : str, optional

    Attributes
    ----------
    matrix : GradedMatrix
    '''

    def __init__(self, matrix: GradedMatrix, grading_shift=0, name=None):
        self.matrix = matrix
        self.grading_shift = grading_shift
        self.name = name

    def __repr__(self):
        return '<ModulePresentation: %s, %i generators, %i relations>' % (
            self.name or 'M', self.generators.rank, self.relations.rank)

    @property
    def ring(self) -> RingPresentation:
        return self.matrix.ring

    @property
    def generators(self) -> GradedFreeModule:
        return self.matrix.target

    @property
    def relations(self) -> GradedFreeModule:
        return self.matrix.source

    @classmethod
    def residue_field(cls, ring: RingPresentation, degree=0) -> 'ModulePresentation':
        '''
        The residue field k = R/m, presented by the row of variables.
        '''
        target = GradedFreeModule(ring, [degree])
        source = GradedFreeModule(ring, [degree + 1] * ring.nvars)
        entries = {(0, j): ring.variable(j) for j in range(ring.nvars)}
        return cls(GradedMatrix(source, target, entries), name='k')

    @classmethod
    def cyclic(cls, ring: RingPresentation, generators, degree=0) -> 'ModulePresentation':
        '''
        The cyclic module R/I for a homogeneous ideal given by generators.
        '''
        from mintk.ring import GradedIdeal
        ideal = GradedIdeal(ring, generators)
        gens = ideal.minimal_generators()
        target = GradedFreeModule(ring, [degree])
        source = GradedFreeModule(ring, [degree + g.degree for g in gens])
        return cls(GradedMatrix(source, target, {(0, j): g for j, g in enumerate(gens)}),
                   name='R/%s' % ideal.format())

    @classmethod
    def free(cls, ring: RingPresentation, degrees) -> 'ModulePresentation':
        target = GradedFreeModule(ring, degrees)
        return cls(GradedMatrix(GradedFreeModule(ring, []), target, {}), name='free')

    @classmethod
    def from_rows(cls, ring, rows, degrees, source_degrees=None) -> 'ModulePresentation':
        return cls(GradedMatrix.from_rows(ring, rows, degrees, source_degrees))

    @classmethod
    def from_ideal(cls, ring: RingPresentation, generators, degree_cap=None) -> 'ModulePresentation':
        '''
        The ideal I itself as a module, presented by the syzygies of its minimal generators.
        '''
        from mintk.ring import GradedIdeal
        from .syzygy import syzygy_step, default_cap
        ideal = GradedIdeal(ring, generators)
        gens = ideal.minimal_generators()
        row = GradedMatrix(GradedFreeModule(ring, [g.degree for g in gens]), GradedFreeModule(ring, [0]),
                           {(0, j): g for j, g in enumerate(gens)})
        cap = degree_cap if degree_cap is not None else default_cap(row.source, ring)
        return cls(syzygy_step(row, cap), name=ideal.format())

    def direct_sum(self, other: 'ModulePresentation') -> 'ModulePresentation':
        a, b = self.matrix, other.matrix
        if a.ring is not b.ring:
            raise ValueError('Direct sum of modules over different rings')
        matrix = GradedMatrix.from_blocks([a.target, b.target], [a.source, b.source], {(0, 0): a, (1, 1): b})
        return ModulePresentation(matrix, name='%s + %s' % (self.name or 'M', other.name or 'N'))

    def minimalized(self) -> 'ModulePresentation':
        from .minimalize import minimalize, select_minimal_columns
        matrix = select_minimal_columns(minimalize(self.matrix))
        return ModulePresentation(matrix, self.grading_shift, self.name)

    @property
    def mu(self) -> int:
        '''
        Minimal number of generators.
        '''
        from .minimalize import minimalize
        return minimalize(self.matrix).nrows

    def hilbert_function(self, d) -> int:
        from mintk.arith import rank
        mat = self.matrix.degree_matrix(d)
        return self.generators.dim(d) - (rank(mat, self.ring.field) if mat.size else 0)
