from typing import List, Sequence, Union

from mintk.errors import NotMinimalError
from mintk.resolution import GradedMatrix, Resolution
from .ring import FiberProductRing


def lift_complex(maps: Union[Resolution, Sequence[GradedMatrix]], R: FiberProductRing,
                 side='left') -> List[GradedMatrix]:
    '''
    Read the matrices of a minimal complex over S (or T) as matrices over the fiber product R.

    The entries lie in m_S, which is an ideal of R, so the same matrices define maps of free R-modules.
    The result is a complex but in general not a resolution.

    Parameters
    ----------
    maps : Resolution or list of GradedMatrix
    R : FiberProductRing
    side : str
        'left' for a complex over S, 'right' for one over T

    Returns
    -------
    differentials : list of GradedMatrix

    Raises
    ------
    NotMinimalError
        If some entry is a unit
    '''
    base = R.side(side)
    if isinstance(maps, Resolution):
        maps = maps.differentials
    positions = R.positions(side)
    lifted = []
    for n, A in enumerate(maps, start=1):
        if A.ring is not base:
            raise ValueError('Matrix %i is not over the %s ring of the fiber product' % (n, side))
        units = A.unit_entries()
        if units:
            i, j = units[0]
            raise NotMinimalError('Entry (%i, %i) of matrix %i is the unit %s'
                                  % (i, j, n, base.format(A.entry(i, j))))
        lifted.append(A.change_ring(R, positions))
    # consecutive maps share the free modules
    for n in range(1, len(lifted)):
        lifted[n] = lifted[n].with_modules(lifted[n].source, lifted[n - 1].source)
    return lifted
