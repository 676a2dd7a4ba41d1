import math
from collections import Counter
from typing import List, Optional

import pandas as pd

from mintk import logger
from mintk.errors import CapTooLowError, NotArtinianError, NotAComplexError
from .module import GradedFreeModule, GradedMatrix, ModulePresentation
from .minimalize import minimalize, select_minimal_columns
from .syzygy import syzygy_step, default_cap, DEFAULT_DEGREE_SLACK, DEFAULT_BATCH_SIZE


class Resolution:
    '''
    A computed (possibly truncated) minimal graded free resolution F_N -> ... -> F_1 -> F_0 of a module.

    Parameters
    ----------
    module : ModulePresentation
    differentials : list of GradedMatrix
        differentials[n - 1] is the map F_n -> F_{n-1}
    certified : list of bool, optional
        certified[n] tells whether F_n and its differential are provably the full minimal resolution in every degree
    complete_through : list of int or float, optional
        Degree through which the generators of F_n are known to be complete. math.inf when certified
    terminated : bool
        Whether the kernel of the last differential was found to be zero
    tail_complete : int or float
        Degree through which the kernel of the last differential is known to vanish when it is not terminated

    Attributes
    ----------
    module : ModulePresentation
    differentials : list of GradedMatrix
    caps : list of int
        Degree cap used for each step. caps[n] for the step producing F_n
    '''

    def __init__(self, module: ModulePresentation, differentials: List[GradedMatrix], certified=None,
                 complete_through=None, terminated=False, caps=None, tail_complete=None):
        self.module = module
        self.differentials = list(differentials)
        n = len(self.differentials)
        self._certified = list(certified) if certified is not None else [True] * (n + 1)
        self._complete = list(complete_through) if complete_through is not None else [math.inf] * (n + 1)
        self.terminated = terminated
        self.caps = list(caps) if caps is not None else [None] * (n + 1)
        self.tail_complete = tail_complete

    def __repr__(self):
        return '<Resolution: betti %s%s>' % (self.betti, '' if self.certified(self.length) else ' (truncated)')

    @property
    def ring(self):
        return self.module.ring

    @property
    def length(self):
        return len(self.differentials)

    def free(self, n) -> GradedFreeModule:
        if n == 0:
            return self.differentials[0].target if self.differentials else self.module.generators
        if n > self.length:
            return GradedFreeModule(self.ring, [])
        return self.differentials[n - 1].source

    @property
    def frees(self) -> List[GradedFreeModule]:
        return [self.free(n) for n in range(self.length + 1)]

    def differential(self, n) -> GradedMatrix:
        '''
        The map F_n -> F_{n-1}, for 1 <= n <= length.
        '''
        if not 1 <= n <= self.length:
            raise ValueError('Differential %i is not computed, resolution has length %i' % (n, self.length))
        return self.differentials[n - 1]

    @property
    def betti(self) -> List[int]:
        return [F.rank for F in self.frees]

    def graded_betti(self, n) -> Counter:
        return Counter(self.free(n).degrees)

    def certified(self, n) -> bool:
        if n > self.length:
            return self.terminated and all(self._certified)
        return self._certified[n]

    def complete_through(self, n):
        if n > self.length:
            if self.certified(n):
                return math.inf
            return self._complete[-1] if self.tail_complete is None else self.tail_complete
        return self._complete[n]

    def certificate_text(self, n) -> str:
        if self.certified(n):
            return 'certified'
        return 'up to degree %s' % self.complete_through(n)

    def is_minimal(self) -> bool:
        return all(d.is_minimal() for d in self.differentials)

    def check_complex(self):
        '''
        Raise NotAComplexError if some composition of consecutive differentials is nonzero.
        '''
        for n in range(1, self.length):
            product = self.differential(n).compose(self.differential(n + 1))
            if not product.is_zero():
                i, j = product.first_nonzero_entry()
                raise NotAComplexError('d_%i * d_%i is nonzero at entry (%i, %i): %s'
                                       % (n, n + 1, i, j, self.ring.format(product.entry(i, j))),
                                       position=n, entry=(i, j))

    def betti_table(self) -> pd.DataFrame:
        '''
        Graded Betti numbers with columns n and rows the strand degree - n.
        '''
        counts = {}
        for n in range(self.length + 1):
            for d, k in self.graded_betti(n).items():
                counts.setdefault(d - n, {})[n] = k
        strands = sorted(counts) or [0]
        df = pd.DataFrame(0, index=strands, columns=list(range(self.length + 1)), dtype=int)
        for s, row in counts.items():
            for n, k in row.items():
                df.loc[s, n] = k
        df.index.name = 'strand'
        return df

    def syzygy_module(self, n) -> ModulePresentation:
        '''
        The n-th syzygy module Omega_n(M), presented by the differential leaving F_{n+1}.
        '''
        if n == 0:
            return self.module
        if n + 1 <= self.length:
            return ModulePresentation(self.differential(n + 1), name='Omega_%i' % n)
        if self.terminated and n == self.length:
            return ModulePresentation.free(self.ring, self.free(n).degrees)
        raise ValueError('Syzygy module %i needs differential %i, which is not computed' % (n, n + 1))


def minimal_resolution(M: ModulePresentation, n_max, degree_cap=None, degree_slack=DEFAULT_DEGREE_SLACK,
                       require_certified=False, batch_size=DEFAULT_BATCH_SIZE) -> Resolution:
    '''
    Compute the minimal graded free resolution of M through homological degree `n_max`.

    Over an artinian ring each step searches kernel generators through maxdeg(F_n) + h, which makes the step
    certified. Over other rings each step searches through maxdeg(F_n) + `degree_slack` and records the degree
    through which the result is known complete.

    Parameters
    ----------
    M : ModulePresentation
    n_max : int
    degree_cap : int, optional
        Global cap overriding the per-step caps
    degree_slack : int
    require_certified : bool
        Raise CapTooLowError instead of truncating when `degree_cap` is too low for certification
    batch_size : int

    Returns
    -------
    resolution : Resolution

    Raises
    ------
    CapTooLowError
    '''
    if n_max < 0:
        raise ValueError('n_max must be non-negative')
    ring = M.ring
    artinian = ring.is_artinian
    A = select_minimal_columns(minimalize(M.matrix))
    if A.ncols == 0 or n_max == 0:
        terminated = A.ncols == 0
        M0 = ModulePresentation(A, M.grading_shift, M.name)
        return Resolution(M0, [], [True], [math.inf], terminated=terminated, caps=[None])

    diffs = [A]
    certified = [True, True]
    complete = [math.inf, math.inf]
    caps = [None, None]
    terminated = False
    tail = None
    logger.info('Resolving %s over %s: F_0 rank %i, F_1 rank %i' % (M.name or 'module', ring, A.nrows, A.ncols))
    while len(diffs) < n_max:
        n = len(diffs)
        F = diffs[-1].source
        needed = default_cap(F, ring, degree_slack)
        cap = needed if degree_cap is None else degree_cap
        if cap < F.max_degree:
            raise CapTooLowError('Degree cap %i is below the top generator degree %i of F_%i'
                                 % (cap, F.max_degree, n), suggested_cap=needed)
        if artinian:
            if cap < needed and require_certified:
                raise CapTooLowError('Degree cap %i is too low to certify F_%i, need %i' % (cap, n + 1, needed),
                                     suggested_cap=needed)
            cert = certified[n] and cap >= needed
        else:
            cert = False
        ct = math.inf if cert else min(cap, complete[n] + 1)
        B = syzygy_step(diffs[-1], cap, batch_size=batch_size)
        if B.ncols == 0:
            # an empty kernel below the sufficient cap of an artinian ring is not a termination
            terminated = cert or not artinian
            if not terminated:
                tail = cap
            logger.info('Kernel of d_%i vanishes through degree %i' % (n, cap))
            break
        diffs.append(B)
        certified.append(cert)
        complete.append(ct)
        caps.append(cap)
        logger.info('F_%i: rank %i, degrees %i..%i%s' % (n + 1, B.ncols, B.source.min_degree,
                                                         B.source.max_degree, '' if cert else ' (truncated)'))
    M0 = ModulePresentation(A, M.grading_shift, M.name)
    return Resolution(M0, diffs, certified, complete, terminated=terminated, caps=caps, tail_complete=tail)


class BettiGrowthReport:
    '''
    Outcome of checking beta_{n+1} >= factor * beta_n.

    Attributes
    ----------
    factor : int
        2e - l + h - 1 for embedding dimension e, length l and top degree h
    checked : list of (n, beta_n, beta_n+1, bool)
    skipped : list of int
        Steps left out because they are not certified
    '''

    def __init__(self, factor, checked, skipped):
        self.factor = factor
        self.checked = checked
        self.skipped = skipped

    @property
    def passed(self):
        return all(ok for *_, ok in self.checked)

    def lines(self):
        out = ['Betti growth factor 2e-l+h-1 = %i' % self.factor]
        for n, b0, b1, ok in self.checked:
            out.append('  beta_%i = %i, beta_%i = %i: %s' % (n, b0, n + 1, b1, 'ok' if ok else 'VIOLATED'))
        if self.skipped:
            out.append('  skipped uncertified steps %s' % self.skipped)
        return out


def betti_growth_check(res: Resolution, start: Optional[int] = None) -> BettiGrowthReport:
    '''
    Check that Betti numbers grow at least by the factor 2e - l + h - 1 from step `start` on.

    Parameters
    ----------
    res : Resolution
    start : int, optional
        Default is the minimal number of generators of the module

    Raises
    ------
    NotArtinianError
    '''
    ring = res.ring
    if not ring.is_artinian:
        raise NotArtinianError('Betti growth factor needs an artinian ring')
    factor = 2 * ring.embdim - ring.length + ring.artinian_top - 1
    if start is None:
        start = res.betti[0]
    checked, skipped = [], []
    betti = res.betti
    for n in range(start, res.length):
        if not (res.certified(n) and res.certified(n + 1)):
            logger.warning('Skipping uncertified step %i in the Betti growth check' % n)
            skipped.append(n)
            continue
        checked.append((n, betti[n], betti[n + 1], betti[n + 1] >= factor * betti[n]))
    return BettiGrowthReport(factor, checked, skipped)
