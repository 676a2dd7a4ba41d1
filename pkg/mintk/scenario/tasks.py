from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from mintk import logger
from mintk.errors import HypothesisViolatedError
from mintk.ring import GradedIdeal, IdealComparison, ideal_compare
from mintk.resolution import ModulePresentation, minimal_resolution, verify_exactness, betti_growth_check
from mintk.minors import MinorVerdict, TheoremReport, minors_of_resolution, minors_onset, check_minors_in_mr
from mintk.fiberproduct import FiberProductRing, lift_complex, moore_resolution, verify_theorem_fp
from mintk.fiberproduct import compare_with_direct as compare_moore
from mintk.stretched import StretchedGorensteinRing, annihilated_seed, tracked_resolution, verify_theorem_sg
from mintk.stretched import socle_witness
from mintk.deformation import shamash_converse, verify_theorem_lift, compare_with_direct
from .builder import Builder
from .scenario import Declaration
from .properties import property_suite, SUITES

VERIFIED = TheoremReport.VERIFIED
FALSIFIED = TheoremReport.FALSIFIED
INCONCLUSIVE = TheoremReport.INCONCLUSIVE
#: A task that raised
ERROR = 'error'


@dataclass
class TaskResult:
    '''
    Outcome of one scenario task.

    Attributes
    ----------
    name : str
    type : str
    status : str
        VERIFIED, FALSIFIED, INCONCLUSIVE or ERROR
    lines : list of str
        Text report
    records : list of dict
        One record per verdict, without the summary
    summary : dict
        Extra structured values for the summary record
    '''
    name: str
    type: str
    status: str = VERIFIED
    lines: List[str] = field(default_factory=list)
    records: List[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def downgrade(self, status, line=None):
        if _severity(status) > _severity(self.status):
            self.status = status
        if line:
            self.lines.append(line)

    def add_verdict(self, verdict: MinorVerdict):
        self.lines.append('  ' + verdict.format())
        rec = {'task': self.name}
        rec.update(verdict.to_record())
        self.records.append(rec)

    def summary_record(self) -> dict:
        rec = {'task': self.name, 'summary': self.status, 'type': self.type}
        rec.update(self.summary)
        return rec

    @classmethod
    def from_theorem(cls, decl: Declaration, report: TheoremReport) -> 'TaskResult':
        records = report.records(decl.name)
        summary = dict(records[-1])
        for key in ('task', 'summary'):
            summary.pop(key)
        return cls(decl.name, decl.type, report.status, report.lines(), records[:-1], summary)


def _severity(status):
    return {VERIFIED: 0, INCONCLUSIVE: 1, FALSIFIED: 2, ERROR: 3}[status]


_runners: Dict[str, Callable[[Builder, Declaration], TaskResult]] = {}


def runner(type_):
    '''
    Register a function as the runner of a task type.
    '''

    def wrap(func):
        _runners[type_] = func
        return func

    return wrap


def task_types() -> List[str]:
    return sorted(_runners)


def run_task(builder: Builder, decl: Declaration) -> TaskResult:
    '''
    Run one task. Exceptions propagate to the caller.
    '''
    try:
        func = _runners[decl.type]
    except KeyError:
        raise ValueError('Unknown task type %s' % decl.type)
    logger.info('Running task %s (%s)' % (decl.name, decl.type))
    return func(builder, decl)


def _int(body, key, default=None):
    value = body.get(key, default)
    if value is None:
        raise ValueError('Missing integer parameter %s' % key)
    return int(value)


def _bool(body, key, default=False):
    value = body.get(key, default)
    if isinstance(value, str):
        return value.lower() in ('true', 'yes', '1')
    return bool(value)


def _n_range(body, default_max=None):
    n_min = _int(body, 'n_min', 1)
    n_max = _int(body, 'n_max', default_max)
    return list(range(n_min, n_max + 1))


def parse_expectation(ring, text) -> Optional[GradedIdeal]:
    '''
    Read an expected ideal: `m`, `m^r`, `0` or a generator list such as `(x1, x2^2)`.
    Returns None for powers of m, which are matched through the verdict relation.
    '''
    text = str(text).strip()
    if text == 'm' or text.startswith('m^'):
        return None
    if text == '0':
        return GradedIdeal.zero(ring)
    inner = text[1:-1] if text.startswith('(') and text.endswith(')') else text
    return GradedIdeal(ring, [ring.polynomial(g) for g in inner.split(',') if g.strip()])


def match_expectation(verdict: MinorVerdict, text) -> str:
    '''
    VERIFIED if the verdict matches the expected ideal, FALSIFIED if it certainly does not,
    INCONCLUSIVE if the step is truncated.
    '''
    text = str(text).strip()
    expected = parse_expectation(verdict.ideal.ring, text)
    if expected is None:
        if verdict.is_equal:
            return VERIFIED
        return FALSIFIED if verdict.certified else INCONCLUSIVE
    if verdict.is_equal:
        matched = ideal_compare(expected, verdict.ideal).relation == IdealComparison.EQUAL
        return VERIFIED if matched else FALSIFIED
    if not verdict.exhaustive:
        return INCONCLUSIVE
    matched = ideal_compare(expected, verdict.ideal).relation == IdealComparison.EQUAL
    if matched:
        return VERIFIED if verdict.certified else INCONCLUSIVE
    return FALSIFIED if verdict.certified else INCONCLUSIVE


@runner('resolve')
def run_resolve(builder: Builder, decl: Declaration) -> TaskResult:
    body = decl.body
    res = builder.resolution(body['module'], _int(body, 'n_max'))
    result = TaskResult(decl.name, decl.type)
    result.lines.append('resolution of %s over %s' % (body['module'], res.ring))
    result.lines.append('betti numbers %s%s' % (res.betti, ', terminated' if res.terminated else ''))
    result.lines.extend(res.betti_table().to_string().splitlines())
    for n in range(res.length + 1):
        if not res.certified(n):
            result.downgrade(INCONCLUSIVE, 'step %i known %s' % (n, res.certificate_text(n)))
    result.summary['betti'] = res.betti
    return result


@runner('betti')
def run_betti(builder: Builder, decl: Declaration) -> TaskResult:
    '''
    Betti numbers, optionally matched against `expect` and checked for growth by the factor 2e - l + h - 1.
    '''
    body = decl.body
    res = builder.resolution(body['module'], _int(body, 'n_max'))
    result = TaskResult(decl.name, decl.type)
    betti = res.betti
    result.lines.append('betti numbers of %s: %s' % (body['module'], betti))
    for n, expected in enumerate(body.get('expect', [])):
        if n > res.length:
            result.downgrade(INCONCLUSIVE, 'beta_%i not computed' % n)
        elif betti[n] != int(expected):
            status = FALSIFIED if res.certified(n) else INCONCLUSIVE
            result.downgrade(status, 'beta_%i = %i, expected %s' % (n, betti[n], expected))
    if _bool(body, 'growth'):
        growth = betti_growth_check(res)
        result.lines.extend(growth.lines())
        result.summary['growth_factor'] = growth.factor
        if not growth.passed:
            result.downgrade(FALSIFIED, 'Betti growth violated')
        elif not growth.checked:
            result.downgrade(INCONCLUSIVE, 'no certified step to check growth on')
    result.summary['betti'] = betti
    return result


@runner('minors')
def run_minors(builder: Builder, decl: Declaration) -> TaskResult:
    '''
    I_{n,r} for n in n_min .. n_max. The list `expect` is matched cyclically, starting at n_min.
    '''
    body = decl.body
    n_range = _n_range(body)
    r = _int(body, 'r', 1)
    res = builder.resolution(body['module'], n_range[-1])
    expect = body.get('expect', [])
    result = TaskResult(decl.name, decl.type)
    result.lines.append('I_{n,%i} of %s over %s' % (r, body['module'], res.ring))
    verdicts = []
    for k, n in enumerate(n_range):
        v = minors_of_resolution(res, n, r, builder.max_minors)
        verdicts.append(v)
        result.add_verdict(v)
        if expect:
            wanted = expect[k % len(expect)]
            status = match_expectation(v, wanted)
            if status != VERIFIED:
                result.downgrade(status, '  n = %i: expected %s' % (n, wanted))
        elif not v.certified:
            result.downgrade(INCONCLUSIVE)
    result.summary['onset'] = minors_onset(verdicts)
    return result


@runner('exactness')
def run_exactness(builder: Builder, decl: Declaration) -> TaskResult:
    body = decl.body
    res = builder.resolution(body['module'], _int(body, 'n_max'))
    cap = _int(body, 'cap', builder.degree_cap)
    report = verify_exactness(res.differentials, cap)
    result = TaskResult(decl.name, decl.type, lines=['exactness of the resolution of %s' % body['module']])
    result.lines.extend(report.lines())
    if not report.is_exact:
        result.downgrade(FALSIFIED)
    result.summary['nonzero_homology'] = [list(t) for t in report.nonzero()]
    return result


@runner('lifted_koszul')
def run_lifted_koszul(builder: Builder, decl: Declaration) -> TaskResult:
    '''
    Lift the Koszul complex of one factor of a fiber product and confirm it is not acyclic over the product.
    '''
    body = decl.body
    R = builder.ring(body['ring'])
    if not isinstance(R, FiberProductRing):
        raise HypothesisViolatedError('Ring %s is not a fiber product' % body['ring'])
    side = str(body.get('side', 'left'))
    S = R.side(side)
    cap = _int(body, 'cap', 4)
    koszul = minimal_resolution(ModulePresentation.residue_field(S), S.nvars)
    lifted = lift_complex(koszul, R, side)
    report = verify_exactness(lifted, cap, positions=[1])
    result = TaskResult(decl.name, decl.type)
    result.lines.append('Koszul complex of %s lifted to %s, ranks %s' % (S, R, koszul.betti))
    result.lines.extend(report.lines())
    nonzero = [t for t in report.nonzero() if t[0] == 1]
    if not nonzero:
        result.downgrade(FALSIFIED, 'H_1 vanishes through degree %i' % cap)
    result.summary['nonzero_homology'] = [list(t) for t in report.nonzero()]
    return result


@runner('moore')
def run_moore(builder: Builder, decl: Declaration) -> TaskResult:
    '''
    The Moore resolution over a fiber product, its block audit and focus blocks, and a direct comparison.
    '''
    body = decl.body
    R = builder.ring(body['ring'])
    M = builder.module(body['module'])
    n_max = _int(body, 'n_max')
    moore = moore_resolution(M, R, n_max, degree_cap=builder.degree_cap, degree_slack=builder.degree_slack)
    result = TaskResult(decl.name, decl.type)
    result.lines.append('Moore resolution of %s over %s: betti %s' % (body['module'], R, moore.betti))
    problems = moore.block_audit()
    for p in problems:
        result.downgrade(FALSIFIED, '  ' + p)
    if not problems:
        result.lines.append('  block audit passed')
    for n in range(1, moore.length + 1):
        for block in moore.focus_blocks(n):
            result.lines.append('  ' + block.format())
            if not block.literal:
                result.downgrade(FALSIFIED)
    compare = _int(body, 'compare', n_max)
    if compare > 0:
        direct = minimal_resolution(moore.module, min(compare, n_max), degree_cap=builder.degree_cap,
                                    degree_slack=builder.degree_slack)
        rows = compare_moore(moore, direct)
        for row in rows:
            if row['graded']:
                continue
            status = FALSIFIED if row['certified'] else INCONCLUSIVE
            result.downgrade(status, '  n = %i: Moore rank %i, direct rank %i'
                             % (row['n'], row['moore'], row['direct']))
        result.lines.append('  compared with a direct resolution through n = %i' % rows[-1]['n'])
    result.summary['betti'] = moore.betti
    return result


@runner('verify_fp')
def run_verify_fp(builder: Builder, decl: Declaration) -> TaskResult:
    body = decl.body
    M = builder.module(body['module'])
    R = M.ring
    if not isinstance(R, FiberProductRing):
        raise HypothesisViolatedError('Module %s is not over a fiber product' % body['module'])
    r = _int(body, 'r', 1)
    n_range = _n_range(body) if 'n_max' in body else None
    n_top = n_range[-1] if n_range else None
    res = builder.resolution(body['module'], n_top) if n_top else None
    report = verify_theorem_fp(R, M, r, n_range, observe=_bool(body, 'observe'), degree_cap=builder.degree_cap,
                               degree_slack=builder.degree_slack, max_minors=builder.max_minors, resolution=res)
    return TaskResult.from_theorem(decl, report)


@runner('tracked')
def run_tracked(builder: Builder, decl: Declaration) -> TaskResult:
    '''
    Seed a tracked resolution from a generator killed by x_e in the resolution of a module, and audit its counts.
    '''
    body = decl.body
    M = builder.module(body['module'])
    ring = M.ring
    if not isinstance(ring, StretchedGorensteinRing):
        raise HypothesisViolatedError('Module %s is not over a stretched Gorenstein ring' % body['module'])
    k = body.get('k')
    res = builder.resolution(body['module'], (int(k) if k is not None else M.mu + 1) + 3)
    k, B, g = annihilated_seed(res, ring, None if k is None else int(k))
    tracked = tracked_resolution(B, g, _int(body, 'n_max'), pair_start=_bool(body, 'pair_start'),
                                 batch_size=builder.batch_size)
    result = TaskResult(decl.name, decl.type)
    result.lines.append('seeded at step %i of %s, generator %i' % (k, body['module'], g))
    result.lines.extend(tracked.lines())
    for p in tracked.evolution_problems() + tracked.bound_problems():
        result.downgrade(FALSIFIED, '  ' + p)
    result.summary.update({'seed_step': k, 'counts': [list(c) for c in tracked.counts()]})
    return result


@runner('verify_sg')
def run_verify_sg(builder: Builder, decl: Declaration) -> TaskResult:
    body = decl.body
    M = builder.module(body['module'])
    r = _int(body, 'r', 1)
    n_range = _n_range(body) if 'n_max' in body else None
    res = builder.resolution(body['module'], n_range[-1]) if n_range else None
    track = body.get('track_steps')
    report = verify_theorem_sg(M.ring, M, r, n_range, observe=_bool(body, 'observe'),
                               track_steps=None if track is None else int(track),
                               max_minors=builder.max_minors, resolution=res)
    return TaskResult.from_theorem(decl, report)


@runner('socle_witness')
def run_socle_witness(builder: Builder, decl: Declaration) -> TaskResult:
    '''
    For each n, I_{n,1} of the spliced module Omega_n(k)* is the socle and not m.
    '''
    body = decl.body
    ring = builder.ring(body['ring'])
    result = TaskResult(decl.name, decl.type)
    for n in _n_range(body):
        witness = socle_witness(ring, n, tail=_int(body, 'tail', 2))
        result.lines.extend(witness.lines())
        rec = {'task': decl.name}
        rec.update(witness.verdict.to_record())
        result.records.append(rec)
        if not witness.passed:
            result.downgrade(FALSIFIED, '  n = %i: witness failed' % n)
        elif witness.verdict.is_equal:
            result.downgrade(FALSIFIED, '  n = %i: I_{n,1} = m, the socle is all of m' % n)
    return result


@runner('shamash')
def run_shamash(builder: Builder, decl: Declaration) -> TaskResult:
    '''
    Assemble the resolution over R = R'[w] from the one over R' and compare it with a direct resolution.
    '''
    body = decl.body
    pair = builder.pair(body['ring'])
    M = builder.module(body['module'])
    n_max = _int(body, 'n_max')
    F = builder.resolution(body['module'], n_max)
    exact_steps = body.get('exact_steps')
    G = shamash_converse(F, pair, None if exact_steps is None else int(exact_steps))
    result = TaskResult(decl.name, decl.type)
    result.lines.append('assembled over %s from %s' % (pair.total, pair.base))
    result.lines.append('  betti over %s: %s' % (pair.base, F.betti))
    result.lines.append('  betti over %s: %s' % (pair.total, G.betti))
    result.lines.append('  rank G_n = rank F_n + rank F_(n-1) for n <= %i' % G.length)
    if G.exactness is not None:
        result.lines.extend('  ' + s for s in G.exactness.lines())
    nonzero = G.sigma.nonzero_steps()
    result.lines.append('  sigma nonzero at n = %s' % nonzero if nonzero else '  sigma vanishes')
    for n, expected in enumerate(body.get('expect', [])):
        if n <= G.length and G.betti[n] != int(expected):
            result.downgrade(FALSIFIED, '  rank G_%i = %i, expected %s' % (n, G.betti[n], expected))
    steps = _int(body, 'compare', 3)
    if steps > 0:
        rows = compare_with_direct(G, pair, M, min(steps, G.length), degree_slack=builder.degree_slack)
        for row in rows:
            line = '  n = %i: assembled %i, direct %i, graded degrees %s through degree %s' % (
                row['n'], row['assembled'], row['direct'], 'agree' if row['graded'] else 'DIFFER', row['through'])
            if row['graded']:
                result.lines.append(line)
            else:
                result.downgrade(FALSIFIED, line)
    result.summary.update({'betti': G.betti, 'base_betti': F.betti, 'sigma_nonzero': nonzero})
    return result


@runner('verify_lift')
def run_verify_lift(builder: Builder, decl: Declaration) -> TaskResult:
    body = decl.body
    pair = builder.pair(body['ring'])
    M = builder.module(body['module'])
    r = _int(body, 'r', 1)
    n_range = _n_range(body) if 'n_max' in body else None
    res = builder.resolution(body['module'], n_range[-1]) if n_range else None
    report = verify_theorem_lift(pair, M, r, n_range, observe=_bool(body, 'observe'), max_minors=builder.max_minors,
                                 resolution=res, direct_steps=_int(body, 'direct_steps', 3))
    return TaskResult.from_theorem(decl, report)


@runner('property_suite')
def run_property_suite(builder: Builder, decl: Declaration) -> TaskResult:
    '''
    Randomized law checks. With `inject_unit` the minors_in_mr suite is a negative control and must fail.
    '''
    body = decl.body
    inject = _bool(body, 'inject_unit')
    suites = [str(s) for s in body.get('suites', SUITES)]
    report = property_suite(builder.seed, _int(body, 'size', 2), _int(body, 'cases', 200), inject, suites,
                            field=builder.field)
    result = TaskResult(decl.name, decl.type, lines=report.lines())
    failed = report.failed_suites()
    if inject:
        if 'minors_in_mr' not in failed:
            result.downgrade(FALSIFIED, 'the injected unit entry went undetected')
        if any(s != 'minors_in_mr' for s in failed):
            result.downgrade(FALSIFIED)
    elif failed:
        result.downgrade(FALSIFIED)
    result.summary.update({'seed': report.seed, 'cases': report.cases, 'failed': failed})
    return result


@runner('minors_in_mr')
def run_minors_in_mr(builder: Builder, decl: Declaration) -> TaskResult:
    '''
    The r x r minors lie in m^r, for the presentation matrix (n_max = 0) or for d_1 .. d_n_max.
    '''
    body = decl.body
    r = _int(body, 'r', 1)
    n_max = _int(body, 'n_max', 0)
    if n_max == 0:
        matrices = [(0, builder.module(body['module']).matrix)]
    else:
        res = builder.resolution(body['module'], n_max)
        matrices = [(n, res.differential(n)) for n in range(1, res.length + 1)]
    result = TaskResult(decl.name, decl.type)
    for n, A in matrices:
        if min(A.shape) < r:
            continue
        check = check_minors_in_mr(A, r)
        line = '  %s: %s' % ('presentation' if n == 0 else 'd_%i' % n, check.detail)
        if check:
            result.lines.append(line)
        else:
            result.downgrade(FALSIFIED, line)
    return result
