import os
import re

from mintk import logger
from mintk.errors import NameClashError, ScenarioParseError
from mintk.scenario.scenario import Scenario, Declaration


class ScnReader:
    '''
    Parse a Scenario from a SCN file.

    SCN is the plain text scenario format of `mintk`. Each statement starts on its own line::

        setting field = 101
        ring R = plain { variables = [x, y, z], relations = [x*z, y*z] }
        module k = residue { ring = R }
        task t1 = minors { module = k, n_max = 12, r = 1 }

    Blocks hold `key = value` entries separated by commas or newlines.
    Values are blocks, lists in brackets, double-quoted strings or bare atoms.
    A bare atom ends at a comma, a closing bracket or brace, a newline or `#`.
    An atom that looks like an integer is read as an int.
    Text after `#` is a comment.

    Parameters
    ----------
    file : str

    Attributes
    ----------
    scenario : Scenario
    '''

    _RE_NAME = re.compile(r'[A-Za-z_][A-Za-z_0-9]*')
    _RE_INT = re.compile(r'-?[0-9]+')
    _ATOM_END = ',]}\n#'

    def __init__(self, file):
        name = os.path.splitext(os.path.basename(file))[0]
        self.scenario = Scenario(name)
        with open(file) as f:
            self._text = f.read()
        self._pos = 0
        self._parse()

    @classmethod
    def from_string(cls, text, name='scenario') -> Scenario:
        reader = cls.__new__(cls)
        reader.scenario = Scenario(name)
        reader._text = text
        reader._pos = 0
        reader._parse()
        return reader.scenario

    def _location(self, pos=None):
        pos = self._pos if pos is None else pos
        line = self._text.count('\n', 0, pos) + 1
        column = pos - (self._text.rfind('\n', 0, pos) + 1) + 1
        return line, column

    def _error(self, message, pos=None):
        line, column = self._location(pos)
        logger.error('%s: line %i, column %i: %s' % (self.scenario.name, line, column, message))
        return ScenarioParseError(message, line, column)

    def _peek(self):
        return self._text[self._pos] if self._pos < len(self._text) else ''

    def _skip(self, newlines=True):
        while self._pos < len(self._text):
            c = self._text[self._pos]
            if c == '#':
                end = self._text.find('\n', self._pos)
                self._pos = len(self._text) if end < 0 else end
            elif c in ' \t\r' or (newlines and c == '\n'):
                self._pos += 1
            else:
                break

    def _expect(self, char):
        self._skip()
        if self._peek() != char:
            raise self._error('Expect "%s", got "%s"' % (char, self._peek() or 'end of file'))
        self._pos += 1

    def _name(self):
        self._skip(newlines=False)
        match = self._RE_NAME.match(self._text, self._pos)
        if not match:
            raise self._error('Expect a name, got "%s"' % (self._peek() or 'end of file'))
        self._pos = match.end()
        return match.group()

    def _parse(self):
        scn = self.scenario
        while True:
            self._skip()
            if self._pos >= len(self._text):
                break
            start = self._pos
            keyword = self._name()
            line, column = self._location(start)
            if keyword == 'setting':
                key = self._name()
                self._expect('=')
                value = self._value()
                try:
                    scn.set_setting(key, value)
                except ScenarioParseError as e:
                    raise self._error(str(e), start)
            elif keyword in ('ring', 'module', 'task'):
                name = self._name()
                self._expect('=')
                type_ = self._name()
                self._skip(newlines=False)
                body = self._block() if self._peek() == '{' else {}
                try:
                    scn.declare(Declaration(keyword, name, type_, body, line, column))
                except (ScenarioParseError, NameClashError) as e:
                    raise self._error(str(e), start)
            else:
                raise self._error('Unknown statement %s' % keyword, start)
            self._skip(newlines=False)
            if self._peek() not in ('\n', ''):
                raise self._error('Unexpected "%s" after statement' % self._peek())
        try:
            scn.validate()
        except ScenarioParseError as e:
            logger.error('%s: %s' % (scn.name, e))
            raise

    def _value(self):
        self._skip()
        c = self._peek()
        if c == '{':
            return self._block()
        if c == '[':
            return self._list()
        if c == '"':
            return self._string()
        if c == '' or c in self._ATOM_END:
            raise self._error('Missing value')
        start = self._pos
        while self._pos < len(self._text) and self._text[self._pos] not in self._ATOM_END:
            self._pos += 1
        atom = self._text[start:self._pos].strip()
        if self._RE_INT.fullmatch(atom):
            return int(atom)
        return atom

    def _string(self):
        start = self._pos
        end = self._text.find('"', self._pos + 1)
        newline = self._text.find('\n', self._pos + 1)
        if end < 0 or 0 <= newline < end:
            raise self._error('Unterminated string', start)
        self._pos = end + 1
        return self._text[start + 1:end]

    def _separator(self, closing):
        '''
        Consume a comma or newlines between items. Return True when the closing character is next.
        '''
        self._skip(newlines=False)
        c = self._peek()
        if c == ',':
            self._pos += 1
            self._skip()
            return self._peek() == closing
        if c == '\n':
            self._skip()
            return self._peek() == closing
        if c == closing:
            return True
        raise self._error('Expect "," or "%s", got "%s"' % (closing, c or 'end of file'))

    def _block(self):
        self._expect('{')
        body = {}
        self._skip()
        if self._peek() == '}':
            self._pos += 1
            return body
        while True:
            start = self._pos
            key = self._name()
            if key in body:
                raise self._error('Duplicated key %s' % key, start)
            self._expect('=')
            body[key] = self._value()
            if self._separator('}'):
                self._pos += 1
                return body

    def _list(self):
        self._expect('[')
        items = []
        self._skip()
        if self._peek() == ']':
            self._pos += 1
            return items
        while True:
            items.append(self._value())
            if self._separator(']'):
                self._pos += 1
                return items


Scenario.register_format('.scn', ScnReader)
