from hypothesis import strategies as st

from mintk.arith import Field, Polynomial, RationalField
from mintk.ring import RingPresentation
from mintk.resolution import GradedFreeModule, GradedMatrix


def coefficients(field: Field) -> st.SearchStrategy:
    if isinstance(field, RationalField):
        return st.integers(-3, 3)
    return st.integers(0, field.p - 1)


@st.composite
def homogeneous_forms(draw, ring: RingPresentation, d) -> Polynomial:
    '''
    An element of R_d in normal form. Zero for negative d.
    '''
    if d < 0:
        return ring.zero()
    field = ring.field
    terms = {}
    for m in ring.standard_monomials(d):
        c = field.from_int(draw(coefficients(field)))
        if not field.is_zero(c):
            terms[m] = c
    return Polynomial(field, ring.nvars, terms)


@st.composite
def minimal_matrices(draw, ring: RingPresentation, max_rows, max_cols, max_degree=2,
                     inject_unit=False) -> GradedMatrix:
    '''
    A matrix with homogeneous entries of degree 1 .. max_degree, hence inside m.
    With `inject_unit`, entry (0, 0) is set to 1, which breaks minimality on purpose.

    Parameters
    ----------
    ring : RingPresentation
    max_rows : int
    max_cols : int
    max_degree : int
        Row degrees are 0 or 1 and column degrees exceed the largest row degree by 1 .. max_degree - 1
    inject_unit : bool
    '''
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    tdeg = draw(st.lists(st.integers(0, 1), min_size=m, max_size=m))
    gaps = draw(st.lists(st.integers(1, max(max_degree - 1, 1)), min_size=n, max_size=n))
    sdeg = [max(tdeg) + g for g in gaps]
    if inject_unit:
        sdeg[0] = tdeg[0]
    entries = {}
    for i in range(m):
        for j in range(n):
            d = sdeg[j] - tdeg[i]
            if d < 1:
                continue
            p = draw(homogeneous_forms(ring, d))
            if not p.is_zero():
                entries[(i, j)] = p
    if inject_unit:
        entries[(0, 0)] = ring.one()
    return GradedMatrix(GradedFreeModule(ring, sdeg), GradedFreeModule(ring, tdeg), entries, normalize=False)
