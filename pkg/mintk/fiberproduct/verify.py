from typing import Optional, Sequence

from mintk import logger
from mintk.errors import HypothesisViolatedError
from mintk.minors import MinorVerdict, TheoremReport, minors_of_resolution, DEFAULT_MAX_MINORS
from mintk.ring import IdealComparison, ideal_compare
from mintk.resolution import ModulePresentation, Resolution, minimal_resolution, DEFAULT_DEGREE_SLACK
from mintk.utils import ceil_div, first_persistent_onset
from .ring import FiberProductRing


def theorem_bound(R: FiberProductRing, r) -> int:
    '''
    The n from which I_{n,r} = m^r is asserted: ceil(2r / (e1 e2)) + 8.
    '''
    return ceil_div(2 * r, R.e1 * R.e2) + 8


def periodicity_onset(verdicts: Sequence[MinorVerdict]) -> Optional[int]:
    '''
    First n from which I_{n,r} = I_{n+2,r} through the computed range, using only fully enumerated ideals.
    '''
    by_n = {v.n: v for v in verdicts}
    flags, indices = [], []
    for v in verdicts:
        w = by_n.get(v.n + 2)
        if w is None:
            continue
        if v.is_equal and w.is_equal:
            same = True
        elif v.exhaustive and w.exhaustive:
            same = ideal_compare(v.ideal, w.ideal).relation == IdealComparison.EQUAL
        else:
            same = False
        flags.append(same)
        indices.append(v.n)
    return first_persistent_onset(flags, indices)


def verify_theorem_fp(R: FiberProductRing, M: ModulePresentation, r, n_range: Optional[Sequence[int]] = None,
                      observe=False, degree_cap=None, degree_slack=DEFAULT_DEGREE_SLACK,
                      max_minors=DEFAULT_MAX_MINORS, resolution: Optional[Resolution] = None) -> TheoremReport:
    '''
    Check that I_{n,r'}(M) = m^r' over a fiber product for every r' <= r and every n in the range
    at or past ceil(2r'/(e1 e2)) + 8.

    Parameters
    ----------
    R : FiberProductRing
    M : ModulePresentation
        A module over R
    r : int
    n_range : list of int, optional
        Default is 1 .. bound for r
    observe : bool
        Run even if the hypotheses fail. The status is then at best inconclusive
    resolution : Resolution, optional
        A resolution of M to reuse

    Returns
    -------
    report : TheoremReport

    Raises
    ------
    HypothesisViolatedError
        If embdim(R) < 3 or M has finite projective dimension, unless `observe` is set
    '''
    if r < 1:
        raise ValueError('Minor size must be at least 1')
    if M.ring is not R:
        raise ValueError('The module must be over the fiber product %s' % R)
    violations = []
    if R.embdim < 3:
        violations.append('embedding dimension %i is below 3' % R.embdim)
    bound = {rr: theorem_bound(R, rr) for rr in range(1, r + 1)}
    if n_range is None:
        n_range = range(1, bound[r] + 1)
    n_range = sorted(n_range)
    res = resolution or minimal_resolution(M, n_range[-1], degree_cap=degree_cap, degree_slack=degree_slack)
    if res.terminated:
        violations.append('the module has finite projective dimension %i' % res.length)
    for v in violations:
        if not observe:
            raise HypothesisViolatedError('Fiber product theorem does not apply: %s' % v)
        logger.warning('Observing outside the hypotheses: %s' % v)

    logger.info('Checking I_{n,r} = m^r over %s for r <= %i, n in %i..%i'
                % (R, r, n_range[0], n_range[-1]))
    verdicts = {rr: [minors_of_resolution(res, n, rr, max_minors) for n in n_range] for rr in range(1, r + 1)}
    subject = '%s, M = %s' % (R, M.name or 'M')
    report = TheoremReport('fiber product theorem', subject, bound, verdicts)

    betti = res.betti
    betti_onset = first_persistent_onset([b >= r for b in betti])
    report.notes.append('betti numbers %s' % betti)
    report.notes.append('beta_n >= %i from n = %s on' % (r, betti_onset))
    report.data['betti'] = betti
    report.data['betti_onset'] = betti_onset
    for rr in verdicts:
        onset = periodicity_onset(verdicts[rr])
        report.notes.append('r = %i: I_{n,r} = I_{n+2,r} from n = %s on' % (rr, onset))
    if n_range[-1] < bound[r]:
        report.notes.append('range stops before the bound %i' % bound[r])
    if violations:
        report.status = TheoremReport.INCONCLUSIVE
        report.notes.append('hypotheses not met (%s), observed only' % '; '.join(violations))
    return report
