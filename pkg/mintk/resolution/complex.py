from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from mintk import logger
from mintk.arith import EchelonBasis, nullspace, rank
from mintk.errors import NotAComplexError
from .module import GradedMatrix


class ExactnessReport:
    '''
    Degree-wise homology of a complex of graded free modules.

    Attributes
    ----------
    homology : dict of (int, int) -> int
        dim_k H_i in degree d, keyed by (position, degree), for every interior position checked
    cap : int
        Highest degree checked
    witness : tuple or None
        (position, degree, text of a cycle that is not a boundary) for the first nonzero homology found
    '''

    def __init__(self, homology: Dict[Tuple[int, int], int], cap, witness=None):
        self.homology = homology
        self.cap = cap
        self.witness = witness

    @property
    def is_exact(self) -> bool:
        return all(v == 0 for v in self.homology.values())

    def nonzero(self) -> List[Tuple[int, int, int]]:
        return [(i, d, v) for (i, d), v in sorted(self.homology.items()) if v]

    def dimension(self, position, degree) -> int:
        return self.homology.get((position, degree), 0)

    def lines(self):
        if self.is_exact:
            return ['exact at every interior position through degree %i' % self.cap]
        out = ['homology H_%i in degree %i has dimension %i' % t for t in self.nonzero()]
        if self.witness is not None:
            out.append('witness at position %i, degree %i: %s' % self.witness)
        return out


def check_complex(differentials: Sequence[GradedMatrix]):
    '''
    Raise NotAComplexError naming the first nonzero entry of a composition of consecutive maps.

    Parameters
    ----------
    differentials : list of GradedMatrix
        differentials[i - 1] is the map out of position i
    '''
    for i in range(1, len(differentials)):
        a, b = differentials[i - 1], differentials[i]
        product = a.compose(b)
        if not product.is_zero():
            r, c = product.first_nonzero_entry()
            raise NotAComplexError('d_%i * d_%i is nonzero at entry (%i, %i): %s'
                                   % (i, i + 1, r, c, a.ring.format(product.entry(r, c))),
                                   position=i, entry=(r, c))


def verify_exactness(differentials: Sequence[GradedMatrix], cap: int, positions: Optional[Sequence[int]] = None,
                     min_degree: Optional[int] = None) -> ExactnessReport:
    '''
    Compute dim H_i in every degree through `cap` at interior positions of a complex.

    Parameters
    ----------
    differentials : list of GradedMatrix
        differentials[i - 1] is the map F_i -> F_{i-1}
    cap : int
    positions : list of int, optional
        Positions to check. Default is every interior position 1 .. len - 1
    min_degree : int, optional
        Lowest degree to check. Default is the lowest generator degree of the checked modules

    Returns
    -------
    report : ExactnessReport

    Raises
    ------
    NotAComplexError
        If the maps do not compose to zero
    '''
    check_complex(differentials)
    if positions is None:
        positions = list(range(1, len(differentials)))
    homology = {}
    witness = None
    for i in positions:
        out_map = differentials[i - 1]
        in_map = differentials[i]
        F = out_map.source
        field = F.ring.field
        if F.rank == 0:
            continue
        start = F.min_degree if min_degree is None else min_degree
        for d in range(start, cap + 1):
            n = F.dim(d)
            if n == 0:
                continue
            Ad = out_map.degree_matrix(d)
            kernel_dim = n - (rank(Ad, field) if Ad.size else 0)
            Bd = in_map.degree_matrix(d)
            image_dim = rank(Bd.T, field) if Bd.size else 0
            h = kernel_dim - image_dim
            homology[(i, d)] = h
            if h and witness is None:
                image = EchelonBasis(n, field)
                if Bd.size:
                    image.extend(Bd.T)
                for vec in nullspace(Ad, field):
                    if not image.contains(vec):
                        column = F.sparse_to_column(F.from_dense(vec, d), d)
                        witness = (i, d, F.format_element(column))
                        break
                logger.info('Homology of dimension %i at position %i in degree %i' % (h, i, d))
    return ExactnessReport(homology, cap, witness)
