from typing import Optional

from mintk import logger
from mintk.arith import rank
from mintk.errors import HypothesisViolatedError, NameClashError
from mintk.ring import RingPresentation
from mintk.resolution import GradedMatrix, ModulePresentation, GradedFreeModule


class DeformationPair:
    '''
    A graded ring R with a linear element w and the quotient R' = R/(w).

    The element w is always the last variable of R, so that the variables of R' are the first ones of R
    in the same order. With w the smallest variable in degrevlex and w regular on R, normal forms of multiples
    of w are divisible by w term by term.

    Parameters
    ----------
    base : RingPresentation
        R'
    total : RingPresentation
        R, with `name` as last variable
    name : str
        Name of w
    check_cap : int, optional
        w is checked to be a nonzerodivisor on R_d for d < check_cap.
        Default is the top relation degree plus DEFAULT_CHECK_SLACK

    Attributes
    ----------
    base : RingPresentation
    total : RingPresentation
    name : str
    check_cap : int
    '''

    #: Degrees beyond the top relation degree through which w-regularity is checked
    DEFAULT_CHECK_SLACK = 3

    def __init__(self, base: RingPresentation, total: RingPresentation, name, check_cap: Optional[int] = None):
        if total.variables[-1] != name:
            raise ValueError('%s must be the last variable of %s' % (name, total))
        if total.variables[:-1] != base.variables:
            raise ValueError('Variables of %s must be those of %s followed by %s' % (total, base, name))
        if total.field != base.field:
            raise ValueError('Base and total ring are over different fields')
        self.base = base
        self.total = total
        self.name = name
        if check_cap is None:
            top = max([r.degree for r in total.relations], default=1)
            check_cap = top + self.DEFAULT_CHECK_SLACK
        self.check_cap = check_cap
        self._check()

    def __repr__(self):
        return '<DeformationPair: %s over %s by %s>' % (self.total, self.base, self.name)

    @property
    def w(self):
        return self.total.variable(self.total.nvars - 1)

    @property
    def w_index(self):
        return self.total.nvars - 1

    @property
    def positions(self):
        '''
        Where the variables of R' sit among the variables of R.
        '''
        return list(range(self.base.nvars))

    def lift(self, A: GradedMatrix) -> GradedMatrix:
        '''
        Read a matrix over R' as a matrix over R through the canonical normal-form lift.
        '''
        if A.ring is not self.base:
            raise ValueError('Matrix is not over the base ring %s' % self.base)
        return A.change_ring(self.total, self.positions)

    def lift_module(self, M: ModulePresentation) -> ModulePresentation:
        '''
        M as a module over R, presented by the lifted relations of M together with w times its generators.
        '''
        A = self.lift(M.matrix)
        target = A.target
        w_part = GradedMatrix(target.shift(1), target, {(i, i): self.w for i in range(target.rank)})
        source = GradedFreeModule(self.total, A.source.degrees + w_part.source.degrees)
        entries = dict(A.entries)
        entries.update({(i, j + A.ncols): p for (i, j), p in w_part.entries.items()})
        return ModulePresentation(GradedMatrix(source, target, entries), M.grading_shift,
                                  name='%s over R' % (M.name or 'M'))

    def _check(self):
        total = self.total
        w = self.w
        if total.normal_form(w) != w:
            raise HypothesisViolatedError('%s is zero or reducible in %s' % (self.name, total))
        # R/(w) maps onto R' when the relations of R vanish in R' modulo w
        for rel in total.relations:
            if not self.base.reduces_to_zero(rel.set_variable_zero(self.w_index)):
                raise HypothesisViolatedError('%s modulo %s is not a relation of %s'
                                              % (total.format(rel), self.name, self.base))
        for d in range(self.check_cap):
            dim = total.hilbert_function(d)
            if dim == 0:
                continue
            if rank(total.multiplication_matrix(w, d), total.field) != dim:
                raise HypothesisViolatedError('%s is a zero divisor on %s in degree %i' % (self.name, total, d))
            # with w regular, dim (R/w)_d = H_R(d) - H_R(d - 1)
            if dim - total.hilbert_function(d - 1) != self.base.hilbert_function(d):
                raise HypothesisViolatedError('R/(%s) and %s have different Hilbert functions in degree %i'
                                              % (self.name, self.base, d))
        logger.debug('%s is regular on %s through degree %i' % (self.name, total, self.check_cap - 1))


def adjoin_variable(base: RingPresentation, name, check_cap: Optional[int] = None) -> DeformationPair:
    '''
    Form R = R'[w] with the same relations, so that w is a linear nonzerodivisor and R/(w) = R'.

    Parameters
    ----------
    base : RingPresentation
    name : str
        Name of the new variable, appended last
    check_cap : int, optional

    Returns
    -------
    pair : DeformationPair

    Raises
    ------
    NameClashError
        If `name` is already a variable of `base`
    '''
    if name in base.variables:
        raise NameClashError('%s is already a variable of %s' % (name, base))
    nvars = base.nvars + 1
    relations = [r.embed(nvars, list(range(base.nvars))) for r in base.relations]
    total = RingPresentation(base.field, list(base.variables) + [name], relations)
    logger.info('Adjoined %s to %s' % (name, base))
    return DeformationPair(base, total, name, check_cap)


def from_total(total: RingPresentation, name, check_cap: Optional[int] = None) -> DeformationPair:
    '''
    Take a ring R with a declared linear element w and form R' = R/(w).

    The relations of R may involve w, in which case the lifted differentials square to nonzero multiples of w.

    Parameters
    ----------
    total : RingPresentation
    name : str
        A variable of `total`
    check_cap : int, optional

    Returns
    -------
    pair : DeformationPair

    Raises
    ------
    HypothesisViolatedError
        If w is a zero divisor on R through the check degree
    '''
    if name not in total.variables:
        raise ValueError('%s is not a variable of %s' % (name, total))
    if total.variables[-1] != name:
        total = total.with_variable_last(name)
    last = total.nvars - 1
    relations = [r.set_variable_zero(last) for r in total.relations]
    base = RingPresentation(total.field, total.variables[:-1], [r for r in relations if not r.is_zero()])
    return DeformationPair(base, total, name, check_cap)
