from dataclasses import dataclass, field
from random import Random
from typing import Callable, Dict, List, Optional

import numpy as np
from hypothesis import Phase, Verbosity, find, settings, strategies as st
from hypothesis.errors import NoSuchExample

from mintk import logger
from mintk.arith import Field, make_field, rank
from mintk.errors import SelfCheckError, HypothesisViolatedError, NotMinimalError
from mintk.ring import RingPresentation
from mintk.resolution import GradedFreeModule, GradedMatrix, ModulePresentation, minimal_resolution
from mintk.minors import LawCheck, check_minors_in_mr, check_tensor_submatrix_law, check_summand_inclusion
from mintk.minors import check_basis_change_invariance, border_tensor, homogeneous_forms, minimal_matrices
from mintk.stretched import build_stretched, find_annihilated_generator
from mintk.utils import compositions


@dataclass
class PropertyFailure:
    '''
    The smallest counterexample found by a property suite.

    Attributes
    ----------
    suite : str
    detail : str
    reproducer : str
        A scenario that reruns the failing check on the shrunk input
    '''
    suite: str
    detail: str
    reproducer: str = ''


@dataclass
class PropertySuiteReport:
    '''
    Attributes
    ----------
    seed : int
    size : int
    cases : dict of str -> int
        Largest number of cases drawn per suite
    failures : list of PropertyFailure
        At most one per suite
    inject_unit : bool
    '''
    seed: int
    size: int
    cases: Dict[str, int] = field(default_factory=dict)
    failures: List[PropertyFailure] = field(default_factory=list)
    inject_unit: bool = False

    @property
    def passed(self):
        return not self.failures

    def failed_suites(self) -> List[str]:
        return sorted({f.suite for f in self.failures})

    def lines(self) -> List[str]:
        out = ['property suites: seed %i, size %i%s' % (self.seed, self.size,
                                                        ', unit entry injected' if self.inject_unit else '')]
        for suite, n in self.cases.items():
            bad = sum(1 for f in self.failures if f.suite == suite)
            out.append('  %-18s %4i cases, %i failed' % (suite, n, bad))
        for f in self.failures:
            out.append('  FAIL %s: %s' % (f.suite, f.detail))
            out.extend('    ' + s for s in f.reproducer.splitlines())
        return out


def _ring_pool(field: Field) -> List[RingPresentation]:
    return [
        RingPresentation(field, ['x', 'y'], ['x*y']),
        RingPresentation(field, ['x', 'y', 'z'], ['x*z', 'y*z']),
        RingPresentation(field, ['x'], ['x^3']),
        RingPresentation(field, ['x', 'y'], ['x^2', 'y^2']),
    ]


def reproducer(A: GradedMatrix, task: str, r) -> str:
    '''
    A scenario rerunning a law on the presentation matrix A.
    '''
    ring = A.ring
    rows = ', '.join('[%s]' % ', '.join(ring.format(p) for p in row) for row in A.rows())
    lines = [
        'setting field = %i' % ring.field.characteristic,
        'ring R = plain { variables = [%s], relations = [%s] }' % (
            ', '.join(ring.variables), ', '.join(ring.format(rel) for rel in ring.relations)),
        'module A = matrix { ring = R, degrees = %s, source_degrees = %s, rows = [%s] }' % (
            list(A.target.degrees), list(A.source.degrees), rows),
        'task t = %s { module = A, r = %i }' % (task, r),
    ]
    return '\n'.join(lines)


def independent_columns(A: GradedMatrix) -> bool:
    '''
    Whether the linear parts of the degree-1 columns of A, with rows of degree 0, are linearly independent over k.
    Such columns are minimal generators of their image.
    '''
    return rank(A.degree_matrix(1), A.ring.field) == A.ncols


#: Seeds for the helpers that take a numpy generator
_seeds = st.integers(0, 2 ** 32 - 1)


@dataclass
class _Suite:
    cases: st.SearchStrategy
    check: Callable[[tuple], LawCheck]
    reproduce: Optional[Callable[[tuple], str]] = None


class _Suites:
    '''
    The individual suites. Each method returns the strategy of the cases and the law checked on one case.
    '''

    def __init__(self, field: Field, size, inject_unit):
        self.size = size
        self.inject_unit = inject_unit
        self.rings = st.sampled_from(_ring_pool(field))
        self.stretched = build_stretched(field, 3)

    def minors_in_mr(self) -> _Suite:
        @st.composite
        def cases(draw):
            A = draw(minimal_matrices(draw(self.rings), self.size, self.size, inject_unit=self.inject_unit))
            r = 1 if self.inject_unit else draw(st.integers(1, min(A.shape)))
            return A, r

        return _Suite(cases(), lambda case: check_minors_in_mr(*case),
                      lambda case: reproducer(case[0], 'minors_in_mr', case[1]))

    def tensor_submatrix(self) -> _Suite:
        side = min(self.size, 2)

        @st.composite
        def cases(draw):
            A = draw(minimal_matrices(draw(self.rings), side, side))
            ell = draw(st.integers(1, 2))
            B, rows, cols = border_tensor(A, ell, np.random.default_rng(draw(_seeds)))
            r_top = min(A.shape)
            parts = [c for total in range(1, ell * r_top + 1)
                     for c in compositions(total, ell, [r_top] * ell) if all(p >= 1 for p in c)]
            return A, ell, B, draw(st.sampled_from(parts)), rows, cols

        return _Suite(cases(), lambda case: check_tensor_submatrix_law(*case))

    def summand_inclusion(self) -> _Suite:
        @st.composite
        def cases(draw):
            ring = draw(self.rings)
            form = draw(homogeneous_forms(ring, 1))
            n = draw(st.integers(1, 2))
            m = draw(st.integers(1, 2))
            r = draw(st.integers(1, 2))
            return ring, form, n, m, r

        def check(case):
            ring, form, n, m, r = case
            k = ModulePresentation.residue_field(ring)
            M = ModulePresentation.cyclic(ring, [form]) if not form.is_zero() else k
            # Omega_n(M) is a direct summand of Omega_n(M + k)
            resMk = minimal_resolution(M.direct_sum(k), n + m)
            resM = minimal_resolution(M, n + 1)
            if resM.terminated and resM.length < n + 1:
                return LawCheck('summand_inclusion', True, 'M has projective dimension below %i' % (n + 1))
            resN = minimal_resolution(resM.syzygy_module(n), m)
            return check_summand_inclusion(resMk, resN, n, m, r)

        return _Suite(cases(), check)

    def basis_change(self) -> _Suite:
        @st.composite
        def cases(draw):
            A = draw(minimal_matrices(draw(self.rings), self.size, self.size))
            return A, draw(st.integers(1, min(A.shape))), draw(_seeds)

        def check(case):
            A, r, seed = case
            return check_basis_change_invariance(A, r, np.random.default_rng(seed))

        return _Suite(cases(), check)

    def annihilated_generator(self) -> _Suite:
        ring = self.stretched

        @st.composite
        def cases(draw):
            rows = draw(st.integers(1, self.size))
            cols = rows + draw(st.integers(1, 2))
            entries = {(i, j): draw(homogeneous_forms(ring, 1)) for i in range(rows) for j in range(cols)}
            return GradedMatrix(GradedFreeModule(ring, [1] * cols), GradedFreeModule(ring, [0] * rows), entries)

        def check(A):
            try:
                A_new, j = find_annihilated_generator(A, ring)
            except (SelfCheckError, HypothesisViolatedError, NotMinimalError) as e:
                return LawCheck('annihilated_generator', False, str(e))
            return LawCheck('annihilated_generator', True, '%i x %i, column %i' % (A.nrows, A.ncols, j))

        return _Suite(cases().filter(independent_columns), check)


#: Suites run by default, in order
SUITES = ('minors_in_mr', 'tensor_submatrix', 'summand_inclusion', 'basis_change', 'annihilated_generator')


def counterexample(cases: st.SearchStrategy, check: Callable[[tuple], LawCheck], max_examples, random: Random):
    '''
    The smallest case failing the check, or None if none of `max_examples` cases fails.
    '''
    config = settings(max_examples=max_examples, derandomize=True, database=None, deadline=None,
                      phases=[Phase.generate, Phase.shrink], verbosity=Verbosity.quiet)
    try:
        return find(cases, lambda case: not check(case), settings=config, random=random)
    except NoSuchExample:
        return None


def property_suite(seed, size, cases=200, inject_unit=False, suites=SUITES,
                   field: Optional[Field] = None) -> PropertySuiteReport:
    '''
    Run the randomized law checks on minimal matrices and modules drawn by hypothesis.

    Each suite searches for a failing case and shrinks it to a smallest one.
    The search of a suite is seeded by (seed, suite, size), so the report depends only on the arguments.

    Parameters
    ----------
    seed : int
    size : int
        Largest number of rows and columns of the matrices, at most 4
    cases : int
        Cases drawn per suite
    inject_unit : bool
        Put a unit entry into the matrices of the minors_in_mr suite, which must then fail
    suites : list of str
    field : Field, optional
        Default is F_101

    Returns
    -------
    report : PropertySuiteReport
    '''
    if not 1 <= size <= 4:
        raise ValueError('Property suite size must be between 1 and 4, got %i' % size)
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise ValueError('Unknown property suite %s' % unknown[0])
    field = field or make_field(101)
    runner = _Suites(field, size, inject_unit)
    report = PropertySuiteReport(seed, size, inject_unit=inject_unit)
    for suite in suites:
        law = getattr(runner, suite)()
        case = counterexample(law.cases, law.check, cases, Random('%i/%s/%i' % (seed, suite, size)))
        report.cases[suite] = cases
        if case is None:
            continue
        check = law.check(case)
        logger.warning('Property %s failed: %s' % (suite, check.detail))
        report.failures.append(PropertyFailure(suite, check.detail, law.reproduce(case) if law.reproduce else ''))
    return report
