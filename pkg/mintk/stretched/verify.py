import math
from typing import List, Optional, Sequence

from mintk import logger
from mintk.errors import HypothesisViolatedError, SelfCheckError, SpliceBrokenError
from mintk.minors import MinorVerdict, TheoremReport, minors_of_resolution, DEFAULT_MAX_MINORS, GRADED_NOTE
from mintk.ring import RingPresentation, IdealComparison, ideal_compare, socle
from mintk.resolution import GradedFreeModule, GradedMatrix, ModulePresentation, Resolution, ExactnessReport
from mintk.resolution import minimal_resolution, betti_growth_check, verify_exactness, dual_presentation
from mintk.resolution import syzygy_step, default_cap
from mintk.utils import ceil_log2
from .ring import StretchedGorensteinRing
from .annihilator import find_annihilated_generator
from .tracking import TrackedResolution, tracked_resolution


def theorem_bound(mu, r) -> int:
    '''
    The n from which I_{n,r}(M) = m^r is guaranteed by the tracked construction for a module with mu generators.
    '''
    if r == 1:
        return mu + 4
    return mu + 1 + 2 * ceil_log2(r) + 2


def annihilated_seed(res: Resolution, ring: StretchedGorensteinRing, k: Optional[int] = None):
    '''
    Find a syzygy module with a generator x_e * e_g, from which a tracked resolution can start.

    For the first k >= mu(M) + 1 with beta_k > beta_{k-1}, the basis of F_k is changed so that the last column u
    of d_k satisfies x_e * u = 0. Then x_e * e_g lies in the kernel of the new d_k, which is Omega_{k+1}(M).

    Returns
    -------
    k : int
    generators : GradedMatrix
        Minimal generators of Omega_{k+1}(M) inside the new F_k
    g : int
    '''
    betti = res.betti
    if k is None:
        k = next((n for n in range(betti[0] + 1, res.length + 1) if betti[n] > betti[n - 1]), None)
        if k is None:
            raise HypothesisViolatedError('No step with growing Betti numbers in a resolution of length %i'
                                          % res.length)
    A, g = find_annihilated_generator(res.differential(k), ring)
    B = syzygy_step(A, default_cap(A.source, ring))
    return k, B, g


def verify_theorem_sg(ring: RingPresentation, M: ModulePresentation, r, n_range: Optional[Sequence[int]] = None,
                      observe=False, track_steps=None, max_minors=DEFAULT_MAX_MINORS,
                      resolution: Optional[Resolution] = None) -> TheoremReport:
    '''
    Check that I_{n,r'}(M) = m^r' over an artinian stretched Gorenstein ring for every r' <= r and every n
    in the range at or past mu(M) + 1 + 2 ceil(log2 r') + 2 (mu(M) + 4 for r' = 1).

    Besides the minors, the report audits the Betti growth beta_{n+1} >= 2 beta_n, the existence of a column
    killed by x_e in every differential past mu(M), and a tracked resolution started from such a column,
    whose x1 * Id blocks give an upper bound on the onset.

    Parameters
    ----------
    ring : RingPresentation
        Normally a StretchedGorensteinRing
    M : ModulePresentation
    r : int
    n_range : list of int, optional
        Default is 1 .. bound for r
    observe : bool
        Run even if the hypotheses fail. The status is then at best inconclusive
    track_steps : int, optional
        Number of tracked differentials. Default reaches the end of the range, at most 4. 0 disables tracking
    resolution : Resolution, optional

    Returns
    -------
    report : TheoremReport

    Raises
    ------
    HypothesisViolatedError
        If the ring is not stretched Gorenstein of embedding dimension at least 3 or M is free,
        unless `observe` is set
    '''
    if r < 1:
        raise ValueError('Minor size must be at least 1')
    if M.ring is not ring:
        raise ValueError('The module must be over %s' % ring)
    stretched = isinstance(ring, StretchedGorensteinRing)
    violations = []
    if not stretched:
        violations.append('the ring is not in stretched Gorenstein normal form')
    if ring.embdim < 3:
        violations.append('embedding dimension %i is below 3' % ring.embdim)

    res = resolution
    mu = (res.betti[0] if res is not None else M.mu)
    bound = {rr: theorem_bound(mu, rr) for rr in range(1, r + 1)}
    if n_range is None:
        n_range = range(1, bound[r] + 1)
    n_range = sorted(n_range)
    if res is None:
        res = minimal_resolution(M, n_range[-1])
    if res.terminated and res.length == 0:
        violations.append('the module is free')
    for v in violations:
        if not observe:
            raise HypothesisViolatedError('Stretched Gorenstein theorem does not apply: %s' % v)
        logger.warning('Observing outside the hypotheses: %s' % v)

    logger.info('Checking I_{n,r} = m^r over %s for r <= %i, n in %i..%i' % (ring, r, n_range[0], n_range[-1]))
    verdicts = {rr: [minors_of_resolution(res, n, rr, max_minors) for n in n_range] for rr in range(1, r + 1)}
    subject = '%s, M = %s' % (ring, M.name or 'M')
    report = TheoremReport('stretched Gorenstein theorem', subject, bound, verdicts)
    report.notes.append(GRADED_NOTE)
    report.data['betti'] = res.betti
    report.notes.append('betti numbers %s' % res.betti)

    if ring.is_artinian:
        growth = betti_growth_check(res)
        report.notes.extend(growth.lines())
        report.data['growth_factor'] = growth.factor
        if not growth.passed:
            report.downgrade(TheoremReport.FALSIFIED, 'Betti growth fails on a certified step')

    if stretched and ring.e >= 3 and not (res.terminated and res.length == 0):
        _audit_annihilators(report, res, ring, mu)
        if track_steps is None:
            track_steps = min(4, n_range[-1] - mu - 2)
        if track_steps > 0 and res.length > mu + 1:
            _audit_tracking(report, res, ring, r, track_steps)

    if n_range[-1] < bound[r]:
        report.notes.append('range stops before the bound %i' % bound[r])
    if violations:
        report.status = TheoremReport.INCONCLUSIVE
        report.notes.append('hypotheses not met (%s), observed only' % '; '.join(violations))
    return report


def _audit_annihilators(report: TheoremReport, res: Resolution, ring: StretchedGorensteinRing, mu):
    found, skipped = [], []
    for n in range(mu + 1, res.length + 1):
        A = res.differential(n)
        if A.ncols <= A.nrows:
            skipped.append(n)
            continue
        find_annihilated_generator(A, ring)
        found.append(n)
    report.notes.append('column killed by x%i found in d_n for n in %s' % (ring.e, found))
    if skipped:
        report.notes.append('  d_n not wider than tall for n in %s' % skipped)
    report.data['annihilated_steps'] = found


def _audit_tracking(report: TheoremReport, res: Resolution, ring: StretchedGorensteinRing, r, track_steps):
    k, B, g = annihilated_seed(res, ring)
    tracked = tracked_resolution(B, g, track_steps, pair_start=True)
    report.notes.extend(tracked.lines())
    # d_n of N is d_{n+k+1} of M
    offset = k + 1
    tb = tracked.resolution.betti
    mismatch = [n for n in range(len(tb)) if n + offset <= res.length and tb[n] != res.betti[n + offset]]
    if mismatch:
        report.downgrade(TheoremReport.FALSIFIED, 'tracked Betti numbers differ from beta_{n+%i}(M) at n = %s'
                         % (offset, mismatch))
    else:
        report.notes.append('tracked resolution of Omega_%i(M) matches beta_{n+%i}(M)' % (offset, offset))
    onsets = {}
    for rr in range(2, r + 1):
        n_block = tracked.block_onset(rr)
        if n_block is None:
            report.notes.append('r = %i: x1 * Id_%i block not reached in %i tracked steps' % (rr, rr, track_steps))
            continue
        onsets[rr] = n_block + offset
        observed = report.onset(rr)
        report.notes.append('r = %i: x1 * Id_%i in d_n(M) from n = %i, observed onset %s'
                            % (rr, rr, n_block + offset, observed))
        past = [v for v in report.verdicts[rr] if v.n >= n_block + offset and not v.is_equal and v.certified]
        if past:
            report.downgrade(TheoremReport.FALSIFIED,
                             'r = %i: certified proper verdict past the tracked block at n = %i' % (rr, past[0].n))
    report.data['tracked_counts'] = tracked.counts()
    report.data['tracked_onsets'] = onsets


class SocleWitness:
    '''
    The spliced resolution of M_n = Omega_n(k)* and the ideal I_{n,1}(M_n) it exhibits.

    G_i = F_{n-1-i}* for i < n, G_n = R with d_n the multiplication by the socle generator,
    and G_{n+j} = F_j for j >= 1, where F is the minimal resolution of k.

    Attributes
    ----------
    n : int
    complex : list of GradedMatrix
        complex[i - 1] is the map G_i -> G_{i-1}
    shift : int
        Degree added to the duals so that all degrees are non-negative
    exactness : ExactnessReport
    verdict : MinorVerdict
        I_{n,1}(M_n) against m
    socle_equal : bool
        Whether I_{n,1}(M_n) equals the socle
    dual_mu : int or None
        Number of generators of Omega_n(k)* from an independent dual presentation
    '''

    def __init__(self, n, complex_, shift, exactness: ExactnessReport, verdict: MinorVerdict, socle_equal,
                 dual_mu=None):
        self.n = n
        self.complex = complex_
        self.shift = shift
        self.exactness = exactness
        self.verdict = verdict
        self.socle_equal = socle_equal
        self.dual_mu = dual_mu

    def __repr__(self):
        return '<SocleWitness: n=%i, %s>' % (self.n, self.verdict.format())

    @property
    def ranks(self) -> List[int]:
        return [self.complex[0].target.rank] + [D.source.rank for D in self.complex]

    @property
    def passed(self) -> bool:
        return self.exactness.is_exact and self.socle_equal and self.dual_mu in (None, self.ranks[0])

    def lines(self) -> List[str]:
        out = ['socle witness n = %i: spliced ranks %s' % (self.n, self.ranks)]
        out.extend('  ' + s for s in self.exactness.lines())
        out.append('  ' + self.verdict.format())
        out.append('  I_{%i,1}(M_%i) %s the socle' % (self.n, self.n, 'equals' if self.socle_equal else 'differs from'))
        if self.dual_mu is not None:
            out.append('  mu(M_%i) = %i by dual presentation' % (self.n, self.dual_mu))
        return out


def socle_witness(ring: RingPresentation, n, tail=2, cross_check=True) -> SocleWitness:
    '''
    Build the minimal resolution of M_n = Omega_n(k)* by splicing the dual of the resolution of k with itself
    through the socle generator, and confirm that I_{n,1}(M_n) is the socle.

    Since the socle is not m once m^2 != 0, no bound on n independent of the module forces I_{n,1} = m.

    Parameters
    ----------
    ring : RingPresentation
        Artinian Gorenstein
    n : int
        At least 1
    tail : int
        Number of maps of the resolution of k appended after the socle map
    cross_check : bool
        Also compute mu(Omega_n(k)*) through dual_presentation

    Returns
    -------
    witness : SocleWitness

    Raises
    ------
    HypothesisViolatedError
        If the ring is not artinian with a one-dimensional socle
    SpliceBrokenError
        If the spliced complex is not minimal or not exact
    SelfCheckError
        If the dual presentation disagrees with the spliced complex
    '''
    if n < 1:
        raise ValueError('n must be at least 1')
    if not ring.is_artinian:
        raise HypothesisViolatedError('Socle witness needs an artinian ring')
    soc = socle(ring)
    gens = soc.minimal_generators()
    if len(gens) != 1 or sum(soc.dimension(d) for d in range(ring.artinian_top + 1)) != 1:
        raise HypothesisViolatedError('The socle of %s is not one-dimensional, the ring is not Gorenstein' % ring)
    x = gens[0].monic()
    s = x.degree

    k = ModulePresentation.residue_field(ring)
    depth = max(n + 1 if cross_check else n, tail)
    res = minimal_resolution(k, depth)
    if res.length < max(n - 1, tail):
        raise HypothesisViolatedError('The residue field has finite projective dimension %i' % res.length)

    c = max(res.free(j).max_degree for j in range(n))
    maps: List[GradedMatrix] = []
    # G_i = F_{n-1-i}* maps to G_{i-1} = F_{n-i}* by the transpose of d_{n-i}
    for i in range(1, n):
        maps.append(res.differential(n - i).transpose(c))
    middle_source = GradedFreeModule(ring, [c + s])
    middle_target = maps[-1].source if maps else res.free(0).dual(c)
    maps.append(GradedMatrix(middle_source, middle_target, {(0, 0): x}))
    for j in range(1, tail + 1):
        maps.append(res.differential(j).shift(c + s))
    for i in range(1, len(maps)):
        maps[i] = maps[i].with_modules(maps[i].source, maps[i - 1].source)

    for i, D in enumerate(maps, start=1):
        if not D.is_minimal():
            raise SpliceBrokenError('Map %i of the spliced complex has a unit entry' % i)
    cap = max(D.source.max_degree for D in maps) + ring.artinian_top
    exactness = verify_exactness(maps, cap)
    if not exactness.is_exact:
        raise SpliceBrokenError('Spliced complex for n = %i is not exact: %s'
                                % (n, '; '.join(exactness.lines())), witness=exactness.witness)

    spliced = Resolution(ModulePresentation(maps[0], grading_shift=c, name='M_%i' % n), maps)
    verdict = minors_of_resolution(spliced, n, 1)
    socle_equal = ideal_compare(verdict.ideal, soc).relation == IdealComparison.EQUAL

    dual_mu = None
    if cross_check:
        dual = dual_presentation(res.syzygy_module(n))
        dual_mu = dual.mu
        if dual_mu != maps[0].target.rank:
            raise SelfCheckError('Dual presentation gives %i generators for M_%i, the spliced complex %i'
                                 % (dual_mu, n, maps[0].target.rank))
    witness = SocleWitness(n, maps, c, exactness, verdict, socle_equal, dual_mu)
    logger.info('Socle witness n = %i: %s' % (n, verdict.format()))
    return witness
