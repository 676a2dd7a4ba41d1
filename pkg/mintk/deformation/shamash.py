from typing import Dict, List, Optional, Tuple

from mintk import logger
from mintk.errors import LiftBrokenError, NotMinimalError, SelfCheckError, SpliceBrokenError
from mintk.resolution import GradedFreeModule, GradedMatrix, ModulePresentation, Resolution, ExactnessReport
from mintk.resolution import check_complex, verify_exactness, minimal_resolution
from .pair import DeformationPair

#: Positions of the assembled complex whose exactness is checked by default
DEFAULT_EXACT_STEPS = 4


class HomotopySigma:
    '''
    The quotients sigma_n = (d_{n-1} d_n) / w of a lifted complex.

    sigma_n maps F_n to F_{n-2} and lowers degrees by one, so its target is F_{n-2} shifted up by one.

    Attributes
    ----------
    maps : dict of int -> GradedMatrix
        sigma_n for n >= 2
    '''

    def __init__(self, maps: Dict[int, GradedMatrix]):
        self.maps = maps

    def __repr__(self):
        return '<HomotopySigma: nonzero at %s>' % self.nonzero_steps()

    def __getitem__(self, n) -> GradedMatrix:
        return self.maps[n]

    def __contains__(self, n):
        return n in self.maps

    def nonzero_steps(self) -> List[int]:
        return [n for n in sorted(self.maps) if not self.maps[n].is_zero()]

    @property
    def is_zero(self):
        return not self.nonzero_steps()

    def commutation_problems(self, lifted: List[GradedMatrix]) -> List[int]:
        '''
        Steps n where d_{n-2} sigma_n differs from sigma_{n-1} d_n.
        '''
        problems = []
        for n in sorted(self.maps):
            if n - 1 not in self.maps:
                continue
            left = lifted[n - 3].shift(1).compose(self.maps[n])
            right = self.maps[n - 1].compose(lifted[n - 1])
            if not (left + (-right)).is_zero():
                problems.append(n)
        return problems


class ShamashResolution(Resolution):
    '''
    The resolution G of M over R assembled from a resolution F' of M over R' = R/(w).

    G_0 = F_0 and G_n = F_{n-1}(+1) + F_n, with d^G_1 = [w, d_1] and

        d^G_{n+1} = [[d_n, (-1)^n sigma_{n+1}], [(-1)^n w, d_{n+1}]]

    where d_n are the lifted differentials and sigma the homotopy quotients.

    Attributes
    ----------
    base : Resolution
        F' over R'
    lifted : list of GradedMatrix
    sigma : HomotopySigma
    exactness : ExactnessReport or None
    '''

    def __init__(self, module, differentials, base: Resolution, lifted, sigma: HomotopySigma,
                 exactness: Optional[ExactnessReport] = None, **kwargs):
        super().__init__(module, differentials, **kwargs)
        self.base = base
        self.lifted = lifted
        self.sigma = sigma
        self.exactness = exactness

    def rank_problems(self) -> List[int]:
        '''
        Steps where rank G_n differs from rank F'_n + rank F'_{n-1}.
        '''
        problems = []
        for n in range(self.length + 1):
            expected = self.base.free(n).rank + (self.base.free(n - 1).rank if n else 0)
            if self.free(n).rank != expected:
                problems.append(n)
        return problems


def lift_and_divide(F: Resolution, pair: DeformationPair) -> Tuple[List[GradedMatrix], HomotopySigma]:
    '''
    Lift the differentials of a minimal resolution over R' to R and divide their compositions by w.

    The lift keeps the normal forms over R', which contain no w. Consecutive lifts compose to zero modulo w,
    and w is regular, so each composition is w times a unique matrix sigma_n.

    Parameters
    ----------
    F : Resolution
        Minimal, over pair.base
    pair : DeformationPair

    Returns
    -------
    lifted : list of GradedMatrix
        lifted[n - 1] is the lift of d_n
    sigma : HomotopySigma

    Raises
    ------
    NotMinimalError
    LiftBrokenError
        If some composition is not divisible by w
    '''
    if F.ring is not pair.base:
        raise ValueError('The resolution is not over %s' % pair.base)
    if not F.is_minimal():
        raise NotMinimalError('Only minimal resolutions can be lifted')
    lifted = [pair.lift(A) for A in F.differentials]
    for n in range(1, len(lifted)):
        lifted[n] = lifted[n].with_modules(lifted[n].source, lifted[n - 1].source)

    k = pair.w_index
    sigma = {}
    for n in range(2, len(lifted) + 1):
        product = lifted[n - 2].compose(lifted[n - 1])
        entries = {}
        for (i, j), poly in product.entries.items():
            q = poly.divide_by_variable(k)
            if q is None:
                raise LiftBrokenError('Entry (%i, %i) of d_%i d_%i is %s, not a multiple of %s'
                                      % (i, j, n - 1, n, pair.total.format(poly), pair.name))
            entries[(i, j)] = q
        sigma[n] = GradedMatrix(product.source, product.target.shift(1), entries)
    homotopy = HomotopySigma(sigma)
    logger.info('Lifted %i differentials to %s, sigma nonzero at %s'
                % (len(lifted), pair.total, homotopy.nonzero_steps()))
    return lifted, homotopy


def shamash_converse(F: Resolution, pair: DeformationPair, exact_steps=None) -> ShamashResolution:
    '''
    Assemble the minimal resolution over R of an R'-module M from its minimal resolution over R' = R/(w).

    With sigma_n = d_{n-1} d_n / w on the lifted differentials,
    d^G_{n+1} = [[d_n, (-1)^n sigma_{n+1}], [(-1)^n w, d_{n+1}]].
    The sign (-1)^n on sigma_{n+1} is the one for which d^G squares to zero with these lifts.

    Parameters
    ----------
    F : Resolution
        Minimal resolution of M over pair.base
    pair : DeformationPair
    exact_steps : int, optional
        Exactness of G is checked at positions 1 .. exact_steps, through one degree past the top generator
        degree there. Default DEFAULT_EXACT_STEPS. 0 skips the check

    Returns
    -------
    G : ShamashResolution

    Raises
    ------
    NotAComplexError
        If the assembled maps do not square to zero
    NotMinimalError
    SpliceBrokenError
        If G is not exact where checked
    SelfCheckError
        If the ranks of G do not follow rank F'_n + rank F'_{n-1}
    '''
    if exact_steps is None:
        exact_steps = DEFAULT_EXACT_STEPS
    if F.length == 0 and not F.terminated:
        raise ValueError('The resolution over %s has no differentials' % pair.base)
    lifted, sigma = lift_and_divide(F, pair)
    total = pair.total
    w = pair.w

    L = F.length
    frees = [GradedFreeModule(total, F.free(0).degrees)] + [A.source for A in lifted]
    if lifted:
        frees[0] = lifted[0].target
    if F.terminated:
        frees.append(GradedFreeModule(total, []))
    length = len(frees) - 1

    def free(n):
        return frees[n] if 0 <= n < len(frees) else GradedFreeModule(total, [])

    def scalar_w(module: GradedFreeModule, sign) -> GradedMatrix:
        ws = w.scale(total.field.coerce(sign))
        return GradedMatrix(module.shift(1), module, {(i, i): ws for i in range(module.rank)})

    G = [free(0)] + [free(n - 1).shift(1).direct_sum(free(n)) for n in range(1, length + 1)]
    maps = []
    for n in range(length):
        # d^G_{n+1}: F_n(+1) + F_{n+1} -> F_{n-1}(+1) + F_n
        sign = 1 if n % 2 == 0 else -1
        rows = [free(n - 1).shift(1), free(n)]
        cols = [free(n).shift(1), free(n + 1)]
        blocks = {(1, 0): scalar_w(free(n), sign)}
        if n >= 1:
            blocks[(0, 0)] = lifted[n - 1].shift(1)
        if n + 1 <= L:
            blocks[(1, 1)] = lifted[n]
        if n + 1 in sigma:
            blocks[(0, 1)] = sigma[n + 1].scale(sign)
        D = GradedMatrix.from_blocks(rows, cols, {k: b for k, b in blocks.items()
                                                  if b.target.rank and b.source.rank},
                                     source=G[n + 1], target=G[n])
        maps.append(D)

    check_complex(maps)
    for n, D in enumerate(maps, start=1):
        if not D.is_minimal():
            i, j = D.unit_entries()[0]
            raise NotMinimalError('Entry (%i, %i) of d^G_%i is a unit' % (i, j, n))

    exactness = None
    positions = list(range(1, min(exact_steps, len(maps) - 1) + 1))
    if positions:
        cap = max(maps[i - 1].source.max_degree for i in positions) + 1
        exactness = verify_exactness(maps, cap, positions)
        if not exactness.is_exact:
            raise SpliceBrokenError('Assembled complex over %s is not exact: %s'
                                    % (total, '; '.join(exactness.lines())), witness=exactness.witness)

    certified = [F.certified(0)] + [F.certified(n) and F.certified(n - 1) for n in range(1, length + 1)]
    complete = [F.complete_through(0)] + [min(F.complete_through(n), F.complete_through(n - 1) + 1)
                                          for n in range(1, length + 1)]
    module = ModulePresentation(maps[0], F.module.grading_shift, name=F.module.name)
    G_res = ShamashResolution(module, maps, F, lifted, sigma, exactness, certified=certified,
                              complete_through=complete, terminated=F.terminated)
    problems = G_res.rank_problems()
    if problems:
        raise SelfCheckError('Ranks of the assembled resolution break rank F_n + rank F_{n-1} at n = %s' % problems)
    logger.info('Assembled resolution over %s with betti %s' % (total, G_res.betti))
    return G_res


def compare_with_direct(G: Resolution, pair: DeformationPair, M: ModulePresentation, n_max=None,
                        degree_slack=2) -> List[dict]:
    '''
    Resolve M over R directly and compare graded Betti numbers with the assembled resolution, step by step.

    The direct resolution over R is truncated, so graded Betti numbers are compared only through the degree
    where the direct step is known complete.
    '''
    if n_max is None:
        n_max = G.length
    direct = minimal_resolution(pair.lift_module(M), n_max, degree_slack=degree_slack)
    out = []
    for n in range(min(G.length, direct.length) + 1):
        top = direct.complete_through(n)
        assembled = {d: k for d, k in G.graded_betti(n).items() if d <= top}
        found = {d: k for d, k in direct.graded_betti(n).items() if d <= top}
        out.append({
            'n'        : n,
            'assembled': G.free(n).rank,
            'direct'   : direct.free(n).rank,
            'graded'   : assembled == found,
            'through'  : top,
        })
    return out
