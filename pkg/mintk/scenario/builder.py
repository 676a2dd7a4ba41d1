from functools import reduce
from typing import Dict, Optional, Union

from mintk import logger
from mintk.arith import make_field
from mintk.errors import ScenarioParseError
from mintk.ring import RingPresentation
from mintk.resolution import ModulePresentation, Resolution, minimal_resolution, dual_presentation
from mintk.fiberproduct import fiber_product
from mintk.stretched import build_stretched
from mintk.deformation import DeformationPair, adjoin_variable, from_total
from .scenario import Scenario, Declaration


class Builder:
    '''
    Build the rings and modules declared in a scenario on demand, and cache them and their resolutions.

    Parameters
    ----------
    scenario : Scenario
    seed : int, optional
        Overrides the scenario setting
    degree_cap : int, optional
        Overrides the scenario setting

    Attributes
    ----------
    scenario : Scenario
    field : Field
    seed : int
    degree_cap : int or None
    degree_slack : int
    max_minors : int
    batch_size : int
    '''

    def __init__(self, scenario: Scenario, seed: Optional[int] = None, degree_cap: Optional[int] = None):
        self.scenario = scenario
        self.field = make_field(scenario.field)
        self.seed = scenario.seed if seed is None else seed
        self.degree_cap = scenario.degree_cap if degree_cap is None else degree_cap
        self.degree_slack = scenario.degree_slack
        self.max_minors = scenario.max_minors
        self.batch_size = scenario.batch_size
        self._rings: Dict[str, RingPresentation] = {}
        self._pairs: Dict[str, DeformationPair] = {}
        self._modules: Dict[str, ModulePresentation] = {}
        self._resolutions: Dict[str, Resolution] = {}

    @staticmethod
    def _require(decl: Declaration, body: dict, key):
        if key not in body:
            raise ScenarioParseError('%s %s: missing key %s' % (decl.kind, decl.name, key), decl.line)
        return body[key]

    def _plain(self, decl, body) -> RingPresentation:
        variables = [str(v) for v in self._require(decl, body, 'variables')]
        relations = [str(r) for r in body.get('relations', [])]
        return RingPresentation(self.field, variables, relations)

    def ring(self, ref: Union[str, dict], owner: Optional[Declaration] = None) -> RingPresentation:
        '''
        The ring declared under a name, or built from an inline `plain` block.
        '''
        if isinstance(ref, dict):
            return self._plain(owner, ref)
        if ref in self._rings:
            return self._rings[ref]
        decl = self.scenario.rings[ref]
        body = decl.body
        if decl.type == 'plain':
            ring = self._plain(decl, body)
        elif decl.type == 'fiber_product':
            left = self.ring(self._require(decl, body, 'left'), decl)
            right = self.ring(self._require(decl, body, 'right'), decl)
            ring = fiber_product(left, right)
        elif decl.type == 'stretched_gorenstein':
            ring = build_stretched(self.field, int(self._require(decl, body, 'e')), int(body.get('s', 2)),
                                   body.get('units'))
        else:
            if 'base' in body:
                pair = adjoin_variable(self.ring(body['base'], decl), str(body.get('adjoin', 'w')))
            else:
                total = self.ring(self._require(decl, body, 'total'), decl)
                pair = from_total(total, str(self._require(decl, body, 'element')))
            self._pairs[ref] = pair
            ring = pair.total
        logger.info('Built ring %s = %s' % (ref, ring))
        self._rings[ref] = ring
        return ring

    def pair(self, ref: str) -> DeformationPair:
        '''
        The deformation pair behind a `deform` ring.
        '''
        if self.scenario.rings[ref].type != 'deform':
            raise ValueError('Ring %s is not a deform ring' % ref)
        self.ring(ref)
        return self._pairs[ref]

    def module(self, ref: str) -> ModulePresentation:
        if ref in self._modules:
            return self._modules[ref]
        decl = self.scenario.modules[ref]
        body = decl.body
        if decl.type in ('residue', 'cyclic', 'ideal', 'matrix'):
            ring_ref = self._require(decl, body, 'ring')
            if body.get('over', 'total') == 'base':
                # a module over R' = R/(w) of a deform ring R
                ring = self.pair(ring_ref).base
            else:
                ring = self.ring(ring_ref, decl)
        if decl.type == 'residue':
            M = ModulePresentation.residue_field(ring)
        elif decl.type == 'cyclic':
            M = ModulePresentation.cyclic(ring, [ring.polynomial(str(g)) for g in self._require(decl, body, 'ideal')])
        elif decl.type == 'ideal':
            gens = [ring.polynomial(str(g)) for g in self._require(decl, body, 'generators')]
            M = ModulePresentation.from_ideal(ring, gens)
        elif decl.type == 'matrix':
            rows = [[str(v) for v in row] for row in self._require(decl, body, 'rows')]
            M = ModulePresentation.from_rows(ring, rows, self._require(decl, body, 'degrees'),
                                             body.get('source_degrees'))
        elif decl.type == 'sum':
            M = reduce(lambda a, b: a.direct_sum(b), [self.module(p) for p in self._require(decl, body, 'parts')])
        elif decl.type == 'syzygy':
            n = int(self._require(decl, body, 'n'))
            M = self.resolution(self._require(decl, body, 'of'), n + 1).syzygy_module(n)
        else:
            M = dual_presentation(self.module(self._require(decl, body, 'of')))
        M.name = ref
        self._modules[ref] = M
        return M

    def resolution(self, ref: str, n_max) -> Resolution:
        '''
        The minimal resolution of a declared module through step `n_max`, reusing a deeper one if computed.
        '''
        res = self._resolutions.get(ref)
        if res is not None and (res.length >= n_max or res.terminated):
            return res
        res = minimal_resolution(self.module(ref), n_max, degree_cap=self.degree_cap,
                                 degree_slack=self.degree_slack, batch_size=self.batch_size)
        self._resolutions[ref] = res
        return res
