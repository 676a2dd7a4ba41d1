'''
Text form of polynomials.

Accepted input is a sum of terms. Each term is an optional signed coefficient (integer or fraction)
followed by factors `name` or `name^k`, optionally joined by `*` or written side by side.
Variable names are matched longest first, so `x1x2` reads as `x1*x2` when both names are declared.
'''

import re

from mintk.errors import InvalidScalarError
from ..monomial import format_monomial
from ..polynomial import Polynomial

_RE_NUMBER = re.compile(r'\d+(?:\s*/\s*\d+)?')
_RE_INT = re.compile(r'\d+')


class PolynomialSyntaxError(InvalidScalarError):
    '''
    Malformed polynomial text. `column` is the 1-based position of the problem within the text.
    '''

    def __init__(self, message, column):
        super().__init__('%s at column %i' % (message, column))
        self.column = column


def parse_polynomial(text, variables, field) -> Polynomial:
    '''
    Parse a polynomial in the given variables.

    Parameters
    ----------
    text : str
    variables : list of str
    field : Field

    Returns
    -------
    poly : Polynomial

    Raises
    ------
    PolynomialSyntaxError
        If the text is malformed or uses an undeclared name
    '''
    nvars = len(variables)
    names = sorted(((name, i) for i, name in enumerate(variables)), key=lambda t: len(t[0]), reverse=True)
    terms = {}
    pos = 0
    n = len(text)

    def skip_space(p):
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip_space(pos)
    if pos == n:
        raise PolynomialSyntaxError('Empty polynomial', 1)
    first = True
    while True:
        pos = skip_space(pos)
        sign = 1
        if pos < n and text[pos] in '+-':
            sign = -1 if text[pos] == '-' else 1
            pos = skip_space(pos + 1)
        elif not first:
            raise PolynomialSyntaxError('Expected + or -', pos + 1)
        first = False

        coef = field.one
        exps = [0] * nvars
        n_factors = 0
        while True:
            pos = skip_space(pos)
            if pos < n and text[pos] == '*' and n_factors > 0:
                pos = skip_space(pos + 1)
            if pos >= n or text[pos] in '+-':
                break
            m = _RE_NUMBER.match(text, pos)
            if m:
                coef = field.mul(coef, field.parse(m.group()))
                pos = m.end()
                n_factors += 1
                continue
            for name, i in names:
                if text.startswith(name, pos):
                    pos += len(name)
                    power = 1
                    p = skip_space(pos)
                    if p < n and text[p] == '^':
                        m = _RE_INT.match(text, skip_space(p + 1))
                        if m is None:
                            raise PolynomialSyntaxError('Expected exponent', p + 2)
                        power = int(m.group())
                        pos = m.end()
                    exps[i] += power
                    n_factors += 1
                    break
            else:
                raise PolynomialSyntaxError('Unexpected character %r' % text[pos], pos + 1)
        if n_factors == 0:
            raise PolynomialSyntaxError('Empty term', pos + 1)
        if sign < 0:
            coef = field.neg(coef)
        key = tuple(exps)
        terms[key] = field.add(terms.get(key, field.zero), coef)
        if pos >= n:
            break
    return Polynomial(field, nvars, terms)


def format_polynomial(poly: Polynomial, variables) -> str:
    '''
    Canonical text of a polynomial: terms in descending degrevlex order, explicit `*` and `^`.

    Coefficients of prime fields are printed with the representative of smallest absolute value,
    so that the output parses back to the same polynomial.
    '''
    if poly.is_zero():
        return '0'
    out = []
    for idx, (m, c) in enumerate(poly.sorted_terms()):
        negative, text = poly.field.signed(c)
        mono_text = format_monomial(m, variables)
        if mono_text == '1':
            body = text
        elif text == '1':
            body = mono_text
        else:
            body = text + '*' + mono_text
        if idx == 0:
            out.append('-' + body if negative else body)
        else:
            out.append((' - ' if negative else ' + ') + body)
    return ''.join(out)
