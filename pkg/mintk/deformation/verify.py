from typing import Dict, List, Optional, Sequence

from mintk import logger
from mintk.arith import Polynomial, monomials_of_degree
from mintk.errors import HypothesisViolatedError
from mintk.minors import MinorVerdict, TheoremReport, minors_of_resolution, minors_onset, DEFAULT_MAX_MINORS
from mintk.minors import GRADED_NOTE
from mintk.resolution import ModulePresentation, Resolution, minimal_resolution
from mintk.utils import first_persistent_onset
from .pair import DeformationPair
from .shamash import ShamashResolution, shamash_converse, compare_with_direct

#: Last n checked when no range is given
DEFAULT_LAST_STEP = 8

#: Number of steps compared with a direct resolution over R
DEFAULT_DIRECT_STEPS = 3


def lift_threshold(ell: Dict[int, Optional[int]], betti_onset: Optional[int], r) -> Optional[int]:
    '''
    max(l_1, .., l_r, N), or None if one of them was not reached.
    '''
    values = [ell[s] for s in range(1, r + 1)] + [betti_onset]
    if any(v is None for v in values):
        return None
    return max(values)


def w_power_layers(G: Resolution, pair: DeformationPair, verdict: MinorVerdict) -> List[int]:
    '''
    The s in 0 .. r for which w^(r-s) m_{R'}^s is not inside the ideal of the verdict.
    '''
    total = pair.total
    base = pair.base
    r = verdict.r
    missing = []
    for s in range(r + 1):
        wpow = pair.w ** (r - s)
        for m in monomials_of_degree(base.nvars, s):
            f = base.normal_form(Polynomial.from_monomial(base.field, base.nvars, m))
            if f.is_zero():
                continue
            g = total.normal_form(wpow * total.embed_polynomial(f, pair.positions))
            if not verdict.ideal.contains(g):
                missing.append(s)
                break
    return missing


def verify_theorem_lift(pair: DeformationPair, M: ModulePresentation, r, n_range: Optional[Sequence[int]] = None,
                        observe=False, max_minors=DEFAULT_MAX_MINORS, resolution: Optional[Resolution] = None,
                        direct_steps=DEFAULT_DIRECT_STEPS) -> TheoremReport:
    '''
    Check that I_{n,r}^R(M) = m_R^r for every n at or past max(l_1, .., l_r, N), where l_s is the measured
    onset of I_{n,s}^{R'}(M) = m_{R'}^s and N the measured onset of beta_n^{R'}(M) >= r.

    When m_{R'}^r != 0, N is replaced by l_r. Both values are reported.
    The resolution over R is the one assembled from the resolution over R', and a few of its steps are compared
    with a direct resolution over R.

    Parameters
    ----------
    pair : DeformationPair
    M : ModulePresentation
        A module over pair.base
    r : int
    n_range : list of int, optional
        Default is 1 .. DEFAULT_LAST_STEP
    observe : bool
        Run even if M is free over R'. The status is then at best inconclusive
    max_minors : int
    resolution : Resolution, optional
        A resolution of M over R' to reuse
    direct_steps : int
        0 skips the comparison with a direct resolution

    Returns
    -------
    report : TheoremReport

    Raises
    ------
    HypothesisViolatedError
        If M is free over R', unless `observe` is set
    '''
    if r < 1:
        raise ValueError('Minor size must be at least 1')
    base = pair.base
    if M.ring is not base:
        raise ValueError('The module must be over %s' % base)
    if n_range is None:
        n_range = range(1, DEFAULT_LAST_STEP + 1)
    n_range = sorted(n_range)
    n_max = n_range[-1]

    F = resolution or minimal_resolution(M, n_max)
    violations = []
    if F.terminated and F.length == 0:
        violations.append('the module is free over %s' % base)
    for v in violations:
        if not observe:
            raise HypothesisViolatedError('Lifting theorem does not apply: %s' % v)
        logger.warning('Observing outside the hypotheses: %s' % v)

    steps = list(range(1, F.length + 1))
    ell = {}
    for s in range(1, r + 1):
        ell[s] = minors_onset([minors_of_resolution(F, n, s, max_minors) for n in steps]) if steps else None
    betti = F.betti
    betti_onset = first_persistent_onset([b >= r for b in betti]) if not F.terminated else None
    shortcut = base.hilbert_function(r) > 0
    N = ell[r] if shortcut else betti_onset

    G = shamash_converse(F, pair)
    bound = {}
    for rr in range(1, r + 1):
        Nrr = ell[rr] if base.hilbert_function(rr) > 0 else first_persistent_onset([b >= rr for b in betti])
        threshold = lift_threshold(ell, Nrr, rr)
        bound[rr] = threshold if threshold is not None else n_max + 1
    logger.info('Checking I_{n,r} = m^r over %s for r <= %i, n in %i..%i' % (pair.total, r, n_range[0], n_max))
    available = [n for n in n_range if n <= G.length or G.terminated]
    verdicts = {rr: [minors_of_resolution(G, n, rr, max_minors) for n in available] for rr in range(1, r + 1)}
    subject = '%s, M = %s over %s' % (pair.total, M.name or 'M', base)
    report = TheoremReport('lifting theorem', subject, bound, verdicts)
    report.notes.append(GRADED_NOTE)

    report.notes.append('betti numbers over %s: %s' % (base, betti))
    report.notes.append('betti numbers over %s: %s' % (pair.total, G.betti))
    report.notes.append('onsets over %s: %s' % (base, ', '.join('l_%i = %s' % (s, ell[s]) for s in sorted(ell))))
    report.notes.append('beta_n >= %i from n = %s on' % (r, betti_onset))
    if shortcut:
        report.notes.append('m^%i != 0 over %s, so N = l_%i = %s replaces %s' % (r, base, r, ell[r], betti_onset))
    for rr in range(1, r + 1):
        if bound[rr] > n_max:
            report.notes.append('r = %i: threshold not reached in the range' % rr)
    _audit_layers(report, G, pair, r)
    _audit_sigma(report, G)
    if direct_steps > 0:
        _audit_direct(report, G, pair, M, direct_steps)

    report.data.update({'ell': {str(s): ell[s] for s in ell}, 'betti_onset': betti_onset, 'N': N,
                        'betti': G.betti, 'base_betti': betti, 'sigma_nonzero': G.sigma.nonzero_steps()})
    if violations:
        report.status = TheoremReport.INCONCLUSIVE
        report.notes.append('hypotheses not met (%s), observed only' % '; '.join(violations))
    return report


def _audit_layers(report: TheoremReport, G: ShamashResolution, pair: DeformationPair, r):
    verdicts = report.verdicts[r]
    at = next((v for v in verdicts if v.n >= report.bound[r]), None)
    if at is None:
        return
    missing = w_power_layers(G, pair, at)
    if missing:
        report.notes.append('n = %i: w^(%i-s) m^s not inside I_{n,%i} for s = %s' % (at.n, r, r, missing))
    else:
        report.notes.append('n = %i: w^(%i-s) m^s inside I_{n,%i} for s = 0..%i' % (at.n, r, r, r))
    report.data['layers_missing'] = missing


def _audit_sigma(report: TheoremReport, G: ShamashResolution):
    nonzero = G.sigma.nonzero_steps()
    report.notes.append('sigma nonzero at n = %s' % nonzero if nonzero else 'sigma vanishes, G is a mapping cone')
    problems = G.sigma.commutation_problems(G.lifted)
    if problems:
        report.notes.append('sigma does not commute with the differentials at n = %s' % problems)
    else:
        report.notes.append('sigma commutes with the differentials')
    report.data['sigma_commutes'] = not problems


def _audit_direct(report: TheoremReport, G: ShamashResolution, pair: DeformationPair, M, steps):
    rows = compare_with_direct(G, pair, M, min(steps, G.length))
    bad = [row['n'] for row in rows if not row['graded']]
    if bad:
        report.downgrade(TheoremReport.FALSIFIED, 'assembled and direct resolutions differ at n = %s' % bad)
    else:
        report.notes.append('assembled resolution agrees with a direct resolution through n = %i' % rows[-1]['n'])
