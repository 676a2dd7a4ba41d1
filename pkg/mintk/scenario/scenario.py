import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from mintk import logger, MINTK_SCENARIO_PATH
from mintk.errors import NameClashError, ScenarioParseError


@dataclass
class Declaration:
    '''
    One `ring`, `module` or `task` statement of a scenario.

    Attributes
    ----------
    kind : str
        'ring', 'module' or 'task'
    name : str
    type : str
        e.g. 'plain', 'residue', 'minors'
    body : dict
        Parsed key-value entries. Values are dicts, lists, str or int
    line : int
        Line of the statement, for error messages
    column : int
    '''
    kind: str
    name: str
    type: str
    body: dict = field(default_factory=dict)
    line: int = 0
    column: int = 0


class Scenario:
    '''
    A scenario declares rings, modules over them and tasks to run on them, together with a few settings.

    Scenario files are read by format-specific readers registered with `register_format`.

    Attributes
    ----------
    name : str
    rings : dict of str -> Declaration
    modules : dict of str -> Declaration
    tasks : list of Declaration
    '''

    #: Accepted `setting` keys and their types
    SETTING_ATTRS = {'field'       : int,
                     'seed'        : int,
                     'degree_slack': int,
                     'degree_cap'  : int,
                     'max_minors'  : int,
                     'batch_size'  : int,
                     }

    RING_TYPES = ('plain', 'fiber_product', 'stretched_gorenstein', 'deform')
    MODULE_TYPES = ('residue', 'cyclic', 'ideal', 'matrix', 'sum', 'syzygy', 'dual')

    # keys of declaration bodies holding a reference to a ring or a module
    _RING_KEYS = ('ring', 'left', 'right', 'base', 'total')
    _MODULE_KEYS = ('module', 'of', 'parts', 'submodule', 'other')

    _class_map = {}

    @staticmethod
    def register_format(extension, cls):
        Scenario._class_map[extension] = cls

    def __init__(self, name='scenario'):
        self.name = name
        self.field = 101
        self.seed = 1
        self.degree_slack = 2
        self.degree_cap: Optional[int] = None
        self.max_minors = 200000
        self.batch_size = 512
        self.rings: Dict[str, Declaration] = {}
        self.modules: Dict[str, Declaration] = {}
        self.tasks: List[Declaration] = []

    def __repr__(self):
        return '<Scenario: %s, %i rings %i modules %i tasks>' % (
            self.name, len(self.rings), len(self.modules), len(self.tasks))

    def get_settings(self) -> dict:
        return {key: getattr(self, key) for key in self.SETTING_ATTRS}

    def set_setting(self, key, value):
        if key not in self.SETTING_ATTRS:
            raise ScenarioParseError('Invalid setting: %s' % key)
        try:
            setattr(self, key, self.SETTING_ATTRS[key](value))
        except (TypeError, ValueError):
            raise ScenarioParseError('Setting %s expects %s, got %s'
                                     % (key, self.SETTING_ATTRS[key].__name__, value))

    def declare(self, decl: Declaration):
        if decl.kind == 'task':
            if any(t.name == decl.name for t in self.tasks):
                raise NameClashError('Task %s declared twice' % decl.name)
            self.tasks.append(decl)
            return
        table = self.rings if decl.kind == 'ring' else self.modules
        types = self.RING_TYPES if decl.kind == 'ring' else self.MODULE_TYPES
        if decl.type not in types:
            raise ScenarioParseError('Unknown %s type %s' % (decl.kind, decl.type))
        if decl.name in self.rings or decl.name in self.modules:
            raise NameClashError('%s declared twice' % decl.name)
        table[decl.name] = decl

    def validate(self):
        '''
        Check that every reference names a ring or module declared before it is used.

        Raises
        ------
        ScenarioParseError
        '''
        seen_rings, seen_modules = set(), set()
        for decl in list(self.rings.values()) + list(self.modules.values()) + self.tasks:
            self._check_refs(decl, decl.body, seen_rings, seen_modules)
            if decl.kind == 'ring':
                seen_rings.add(decl.name)
            elif decl.kind == 'module':
                seen_modules.add(decl.name)

    def _check_refs(self, decl, body, rings, modules):
        for key, value in body.items():
            if key in self._RING_KEYS and isinstance(value, str) and value not in rings:
                raise ScenarioParseError('%s %s refers to undeclared ring %s' % (decl.kind, decl.name, value),
                                         decl.line, decl.column)
            if key in self._MODULE_KEYS:
                refs = value if isinstance(value, list) else [value]
                for ref in refs:
                    if isinstance(ref, str) and ref not in modules:
                        raise ScenarioParseError('%s %s refers to undeclared module %s'
                                                 % (decl.kind, decl.name, ref), decl.line, decl.column)

    @staticmethod
    def find(file) -> str:
        '''
        Locate a scenario file in the working directory or the scenario search path.
        A name without extension is looked up as `<name>.scn`.
        '''
        candidates = [file] if os.path.splitext(file)[1] else [file, file + '.scn']
        for name in candidates:
            for d in ['.'] + MINTK_SCENARIO_PATH:
                p = os.path.join(d, name)
                if os.path.isfile(p):
                    return p
        raise FileNotFoundError('Scenario file not found: %s' % file)

    @staticmethod
    def open(file) -> 'Scenario':
        '''
        Load a scenario from a file. The format is determined by the extension.

        Parameters
        ----------
        file : str

        Returns
        -------
        scenario : Scenario
        '''
        path = Scenario.find(file)
        basename, ext = os.path.splitext(path)
        try:
            cls = Scenario._class_map[ext.lower()]
        except KeyError:
            raise ValueError('Unsupported scenario format: ' + path)
        scenario = cls(path).scenario
        logger.debug('Loaded %r from %s' % (scenario, path))
        return scenario

    @staticmethod
    def bundled() -> List[str]:
        '''
        Paths of every scenario file on the search path, sorted by name.
        '''
        paths = {}
        for d in MINTK_SCENARIO_PATH:
            if not os.path.isdir(d):
                continue
            for name in sorted(os.listdir(d)):
                ext = os.path.splitext(name)[1].lower()
                if ext in Scenario._class_map and name not in paths:
                    paths[name] = os.path.join(d, name)
        return [paths[name] for name in sorted(paths)]
