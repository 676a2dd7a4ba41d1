from mintk import logger
from mintk.arith import Polynomial
from mintk.errors import NameClashError, FieldMismatchError, SelfCheckError
from mintk.ring import RingPresentation


class FiberProductRing(RingPresentation):
    '''
    The fiber product R = S x_k T of two standard graded rings over their common residue field.

    R is presented on the union of the variables of S and T, with the relations of both plus every product
    of a variable of S with a variable of T, so that m_R = m_S + m_T and m_S * m_T = 0.
    The variables of S come first.

    Parameters
    ----------
    left : RingPresentation
        The ring S
    right : RingPresentation
        The ring T

    Attributes
    ----------
    left : RingPresentation
    right : RingPresentation
    left_positions : list of int
        Index in R of each variable of S
    right_positions : list of int
        Index in R of each variable of T

    Raises
    ------
    NameClashError
        If S and T share a variable name
    FieldMismatchError
    SelfCheckError
        If the Hilbert function of R is not H_S + H_T in positive degrees
    '''

    def __init__(self, left: RingPresentation, right: RingPresentation):
        if left.field != right.field:
            raise FieldMismatchError('Fiber product of rings over %s and %s' % (left.field, right.field))
        clash = set(left.variables) & set(right.variables)
        if clash:
            raise NameClashError('Variables %s appear in both rings' % ', '.join(sorted(clash)))
        if left.nvars == 0 or right.nvars == 0:
            raise ValueError('Both rings of a fiber product must have at least one variable')
        e1, e2 = left.nvars, right.nvars
        nvars = e1 + e2
        self.left = left
        self.right = right
        self.left_positions = list(range(e1))
        self.right_positions = list(range(e1, nvars))
        relations = [r.embed(nvars, self.left_positions) for r in left.relations]
        relations += [r.embed(nvars, self.right_positions) for r in right.relations]
        for i in self.left_positions:
            for j in self.right_positions:
                relations.append(Polynomial.variable(left.field, nvars, i) * Polynomial.variable(left.field, nvars, j))
        super().__init__(left.field, list(left.variables) + list(right.variables), relations)
        self._self_check()

    def __repr__(self):
        return '<FiberProductRing: %s x_k %s>' % (self.left, self.right)

    @property
    def e1(self):
        return self.left.nvars

    @property
    def e2(self):
        return self.right.nvars

    def side(self, which) -> RingPresentation:
        if which == 'left':
            return self.left
        if which == 'right':
            return self.right
        raise ValueError('Side must be left or right, got %s' % which)

    def positions(self, which):
        return self.left_positions if which == 'left' else self.right_positions

    def lift_polynomial(self, f: Polynomial, which='left') -> Polynomial:
        return self.embed_polynomial(f, self.positions(which))

    def _self_check(self):
        tops = [self.left.artinian_top, self.right.artinian_top]
        if all(t != float('inf') for t in tops):
            top = max(tops) + 1
        else:
            top = max([r.degree for r in self.left.relations + self.right.relations], default=2) + 2
        for d in range(1, top + 1):
            expected = self.left.hilbert_function(d) + self.right.hilbert_function(d)
            if self.hilbert_function(d) != expected:
                raise SelfCheckError('H_R(%i) = %i but H_S + H_T = %i' % (d, self.hilbert_function(d), expected))
        for i in self.left_positions:
            for j in self.right_positions:
                if not self.reduces_to_zero(self.variable(i) * self.variable(j)):
                    raise SelfCheckError('%s * %s is not zero in the fiber product'
                                         % (self.variables[i], self.variables[j]))
        logger.debug('Fiber product %s passed its self-check through degree %i' % (self, top))


def fiber_product(S: RingPresentation, T: RingPresentation) -> FiberProductRing:
    return FiberProductRing(S, T)
