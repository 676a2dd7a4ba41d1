'''
Monomials are tuples of non-negative exponents, one per variable.
The term order is degree reverse lexicographic with the first variable largest.
'''

from functools import lru_cache
from typing import Tuple

from mintk.errors import ArityMismatchError

Monomial = Tuple[int, ...]


def degree(m: Monomial) -> int:
    return sum(m)


def one(nvars) -> Monomial:
    return (0,) * nvars


def unit(nvars, i) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(nvars))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    '''
    Whether `a` divides `b`.
    '''
    return all(x <= y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    '''
    The monomial a / b. `b` must divide `a`.
    '''
    return tuple(x - y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def is_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def degrevlex_key(m: Monomial):
    '''
    Sort key for the degree reverse lexicographic order. A larger key means a larger monomial.
    '''
    return sum(m), tuple(-e for e in reversed(m))


def monomial_cmp(a: Monomial, b: Monomial) -> int:
    '''
    Compare two monomials in degrevlex.

    Returns
    -------
    sign : int
        -1, 0 or 1

    Raises
    ------
    ArityMismatchError
        If the exponent tuples have different lengths
    '''
    if len(a) != len(b):
        raise ArityMismatchError('Cannot compare monomials in %i and %i variables' % (len(a), len(b)))
    ka, kb = degrevlex_key(a), degrevlex_key(b)
    return (ka > kb) - (ka < kb)


@lru_cache(maxsize=None)
def monomials_of_degree(nvars, d) -> Tuple[Monomial, ...]:
    '''
    All monomials of total degree `d` in `nvars` variables, in descending degrevlex order.
    '''
    if d < 0:
        return ()
    if nvars == 0:
        return ((),) if d == 0 else ()
    result = []

    def _fill(prefix, remaining, slots):
        if slots == 1:
            result.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            _fill(prefix + (e,), remaining - e, slots - 1)

    _fill((), d, nvars)
    result.sort(key=degrevlex_key, reverse=True)
    return tuple(result)


def format_monomial(m: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append('%s^%i' % (name, e))
    return '*'.join(parts) if parts else '1'
