from mintk.errors import NotArtinianError
from .module import ModulePresentation
from .syzygy import syzygy_step, default_cap


def dual_presentation(M: ModulePresentation) -> ModulePresentation:
    '''
    A presentation of M* = Hom_R(M, R) over an artinian ring.

    For a presentation F_1 -> F_0 of M, M* is the kernel of the transpose F_0* -> F_1*. Its minimal generators
    give a map G -> F_0*, and the syzygies of that map present M*.
    Duals are shifted by the largest degree s in the presentation so that all degrees stay non-negative;
    the result records s in `grading_shift` (true degree = internal degree - s).

    Raises
    ------
    NotArtinianError
    '''
    ring = M.ring
    if not ring.is_artinian:
        raise NotArtinianError('Duals are only computed over artinian rings')
    A = M.matrix
    degrees = list(A.source.degrees) + list(A.target.degrees)
    s = max(degrees) if degrees else 0
    At = A.transpose(s)
    B = syzygy_step(At, default_cap(At.source, ring))
    C = syzygy_step(B, default_cap(B.source, ring))
    name = '(%s)*' % (M.name or 'M')
    return ModulePresentation(C, grading_shift=M.grading_shift + s, name=name)
