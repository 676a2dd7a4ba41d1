from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import pandas as pd

from mintk import logger
from mintk.arith import EchelonBasis
from mintk.arith import monomial as mono
from mintk.errors import HypothesisViolatedError, TrackingLostError
from mintk.resolution import GradedFreeModule, GradedMatrix, ModulePresentation, Resolution
from mintk.resolution import select_minimal_columns, syzygy_step, default_cap
from mintk.resolution.minimalize import _span_of_multiples
from mintk.resolution.syzygy import DEFAULT_BATCH_SIZE
from .ring import StretchedGorensteinRing

#: A designated kernel element x_a * w_j, stored as (a, j)
Designation = Tuple[int, int]


@dataclass
class TrackedStep:
    '''
    The designated minimal generators of ker d_n in a tracked resolution.

    Attributes
    ----------
    n : int
        Homological step. The designated elements lie in F_n and are killed by d_n, where d_0 maps F_0 onto N
    designated : list of (int, int)
        Pairs (a, j) standing for x_a * w_j with w_j a basis element of F_n
    x1_block : int
        Size of the x1 * Id block found literally in d_n. 0 for n = 0
    annihilators : dict of int -> str
        For each variable index i, the first designated element killed by x_i, or None
    '''
    n: int
    designated: List[Designation]
    x1_block: int = 0
    annihilators: Dict[int, Optional[str]] = field(default_factory=dict)

    @property
    def gamma_cols(self) -> List[int]:
        return [j for a, j in self.designated if a == 1]

    @property
    def delta_cols(self) -> List[int]:
        return [j for a, j in self.designated if a == 3]

    @property
    def gamma(self):
        return len(self.gamma_cols)

    @property
    def delta(self):
        return len(self.delta_cols)


def designation_text(item: Designation) -> str:
    return 'x%i*w%i' % (item[0], item[1] + 1)


class TrackedResolution:
    '''
    A minimal resolution of a submodule N of a free module in which the bases are chosen so that,
    at every step, the elements x1 * w_j (j in gamma) and x2 * w_k, x3 * w_k (k in delta) are minimal generators
    of the kernel, and the next differential maps its basis onto exactly these elements.

    The counts evolve as (gamma, delta) -> (2 delta, gamma), so the x1 * Id block of d_n grows like 2^(n/2).

    Attributes
    ----------
    ring : StretchedGorensteinRing
    generators : GradedMatrix
        The minimal generators of N chosen by d_0, designated generator first in its degree
    resolution : Resolution
        The resolution of N, with differentials d_1, d_2, ...
    steps : list of TrackedStep
        steps[n] for n = 0 .. length
    pair_start : bool
    '''

    def __init__(self, ring, generators, resolution, steps, pair_start):
        self.ring = ring
        self.generators = generators
        self.resolution = resolution
        self.steps = steps
        self.pair_start = pair_start

    def __repr__(self):
        return '<TrackedResolution: counts %s>' % self.counts()

    def counts(self) -> List[Tuple[int, int]]:
        return [(st.gamma, st.delta) for st in self.steps]

    def x1_block(self, n) -> int:
        '''
        Size of the literal x1 * Id block of d_n.
        '''
        return self.steps[n].x1_block

    def block_onset(self, r) -> Optional[int]:
        '''
        The first n from which d_n carries x1 * Id of size at least r on every computed step.
        '''
        onset = None
        for st in reversed(self.steps[1:]):
            if st.x1_block < r:
                break
            onset = st.n
        return onset

    def evolution_problems(self) -> List[str]:
        problems = []
        start = 2 if self.pair_start else 1
        for prev, st in zip(self.steps[start - 1:], self.steps[start:]):
            if (st.gamma, st.delta) != (2 * prev.delta, prev.gamma):
                problems.append('step %i: counts %s do not follow %s'
                                % (st.n, (st.gamma, st.delta), (prev.gamma, prev.delta)))
        return problems

    def bound_problems(self) -> List[str]:
        '''
        Check gamma_n >= 2^(n/2) for even n and delta_n >= 2^((n-1)/2) for odd n.
        The pair start also has gamma_n >= 2^((n-1)/2) for odd n.
        '''
        problems = []
        for st in self.steps:
            n = st.n
            if n % 2 == 0 and st.gamma < 2 ** (n // 2):
                problems.append('step %i: gamma = %i below 2^%i' % (n, st.gamma, n // 2))
            if n % 2 == 1:
                if st.delta < 2 ** ((n - 1) // 2):
                    problems.append('step %i: delta = %i below 2^%i' % (n, st.delta, (n - 1) // 2))
                if self.pair_start and st.gamma < 2 ** ((n - 1) // 2):
                    problems.append('step %i: gamma = %i below 2^%i' % (n, st.gamma, (n - 1) // 2))
        return problems

    def table(self) -> pd.DataFrame:
        betti = self.resolution.betti
        rows = []
        for st in self.steps:
            rows.append({'n'       : st.n,
                         'gamma'   : st.gamma,
                         'delta'   : st.delta,
                         'x1_block': st.x1_block,
                         'beta'    : betti[st.n] if st.n < len(betti) else None})
        return pd.DataFrame(rows).set_index('n')

    def lines(self) -> List[str]:
        out = ['tracked resolution (%s start), (gamma, delta) per step: %s'
               % ('pair' if self.pair_start else 'single', self.counts())]
        for st in self.steps[1:]:
            out.append('  d_%i: x1 * Id block of size %i' % (st.n, st.x1_block))
        if self.ring.e > 3:
            for st in self.steps:
                extra = {i: w for i, w in st.annihilators.items() if i > 3}
                text = ', '.join('x%i kills %s' % (i, w or 'none') for i, w in sorted(extra.items()))
                out.append('  step %i: %s' % (st.n, text))
        return out


def _coordinate(F: GradedFreeModule, ring, item: Designation) -> Tuple[int, dict]:
    a, j = item
    d = F.degrees[j] + 1
    u = mono.unit(ring.nvars, ring.index(a))
    return d, {F.index(d)[(j, u)]: ring.field.one}


def _check_independent(F: GradedFreeModule, ring, designated: List[Designation], n):
    '''
    The designated elements are linear, so they are minimal generators of the kernel when their images
    in mF / m^2 F are independent.
    '''
    e = ring.nvars
    basis = EchelonBasis(F.rank * e, ring.field)
    for a, j in designated:
        vec = ring.field.zeros(F.rank * e)
        vec[j * e + ring.index(a)] = ring.field.one
        if not basis.add(vec):
            raise TrackingLostError('Designated elements of step %i are dependent in mF/m^2F at %s'
                                    % (n, designation_text((a, j))))


def _annihilators(ring, designated: List[Designation]) -> Dict[int, Optional[str]]:
    out = {}
    for i in range(1, ring.e + 1):
        out[i] = next((designation_text((a, j)) for a, j in designated
                       if ring.reduces_to_zero(ring.x(i) * ring.x(a))), None)
    return out


def _in_span(gens: GradedMatrix, vec, d) -> bool:
    target = gens.target
    basis = EchelonBasis(target.dim(d), gens.ring.field)
    lower = [(deg, target.column_to_sparse(gens.column(j), deg)) for j, deg in enumerate(gens.source.degrees)]
    for image in _span_of_multiples(target, lower, d):
        basis.add(target.to_dense(image, d))
    for deg, col in lower:
        if deg == d:
            basis.add(target.to_dense(col, d))
    return basis.contains(target.to_dense(vec, d))


def _next_designated(designated: List[Designation], positions: List[int]) -> List[Designation]:
    # images of x2 and x3 multiples are multiplied by x1 next, images of x1 multiples by x2 and x3
    gamma = [p for (a, _), p in zip(designated, positions) if a in (2, 3)]
    delta = [p for (a, _), p in zip(designated, positions) if a == 1]
    return [(2, k) for k in delta] + [(3, k) for k in delta] + [(1, j) for j in gamma]


def tracked_resolution(N: Union[GradedMatrix, ModulePresentation], g, n_max, pair_start=False,
                       batch_size=DEFAULT_BATCH_SIZE) -> TrackedResolution:
    '''
    Resolve a submodule N of m R^t that has x_e * e_g as a minimal generator, tracking designated generators.

    d_0 maps the first basis element w onto x_e * e_g. With the single start the kernel of d_0 gets the
    designated element x1 * w. With the pair start it gets x2 * w and x1 * w.
    From then on the images of x2 and x3 multiples are multiplied by x1, and the images of x1 multiples
    by x2 and x3. Every designated element is placed first among the kernel generators of its degree.

    Parameters
    ----------
    N : GradedMatrix or ModulePresentation
        N is the column span of the matrix
    g : int
        Row index of the basis element e_g
    n_max : int
        Number of differentials d_1 .. d_n_max to compute
    pair_start : bool

    Returns
    -------
    tracked : TrackedResolution

    Raises
    ------
    HypothesisViolatedError
        If the ring is not a stretched Gorenstein ring of embedding dimension at least 3, N is not inside m R^t,
        or x_e * e_g is not in N
    TrackingLostError
        If a designated element is not a minimal generator of the kernel it is put in
    '''
    gens = N.matrix if isinstance(N, ModulePresentation) else N
    ring = gens.ring
    if not isinstance(ring, StretchedGorensteinRing) or ring.e < 3:
        raise HypothesisViolatedError('Tracking needs a stretched Gorenstein ring of embedding dimension >= 3')
    if n_max < 1:
        raise ValueError('n_max must be at least 1')
    if not gens.is_minimal():
        raise HypothesisViolatedError('N is not inside m R^t, its generators have a unit entry')
    target = gens.target
    if not 0 <= g < target.rank:
        raise ValueError('No basis element %i in a free module of rank %i' % (g, target.rank))

    d, start = _coordinate(target, ring, (ring.e, g))
    if not _in_span(gens, start, d):
        raise HypothesisViolatedError('x%i * e%i is not in N' % (ring.e, g + 1))
    D0, (p0,) = select_minimal_columns(gens, preferred=[start], preferred_degrees=[d])
    logger.info('Tracking from x%i * e%i, N minimally generated by %i elements' % (ring.e, g + 1, D0.ncols))

    designated = [(2, p0), (1, p0)] if pair_start else [(1, p0)]
    previous: List[Designation] = []
    steps = []
    diffs = []
    A = D0
    for n in range(n_max + 1):
        F = A.source
        _check_independent(F, ring, designated, n)
        x1_block = 0
        if n > 0:
            x1_block = sum(1 for a, _ in previous if a == 1)
        steps.append(TrackedStep(n, list(designated), x1_block, _annihilators(ring, designated)))
        if n == n_max:
            break
        vectors, degrees = [], []
        for item in designated:
            dv, vec = _coordinate(F, ring, item)
            vectors.append(vec)
            degrees.append(dv)
        B, positions = syzygy_step(A, default_cap(F, ring), vectors, degrees, batch_size)
        for item, p in zip(designated, positions):
            a, j = item
            if B.column(p) != {j: ring.x(a)}:
                raise TrackingLostError('Column %i of d_%i is not the designated %s'
                                        % (p, n + 1, designation_text(item)))
        diffs.append(B)
        logger.info('d_%i: rank %i, designated %i' % (n + 1, B.ncols, len(positions)))
        previous = designated
        designated = _next_designated(designated, positions)
        A = B

    module = ModulePresentation(diffs[0], name='N')
    resolution = Resolution(module, diffs, caps=[None] + [default_cap(D.target, ring) for D in diffs])
    tracked = TrackedResolution(ring, D0, resolution, steps, pair_start)
    problems = tracked.evolution_problems() + tracked.bound_problems()
    if problems:
        raise TrackingLostError('Tracked counts are off: %s' % '; '.join(problems))
    return tracked
