'''
A set of commonly used small functions.
'''

import itertools
from typing import Iterable, List, Optional, Sequence


def ceil_log2(n):
    '''
    Smallest integer k with 2**k >= n.

    Parameters
    ----------
    n : int
        Must be positive

    Returns
    -------
    k : int
    '''
    if n < 1:
        raise ValueError('ceil_log2 requires a positive integer')
    return (n - 1).bit_length()


def ceil_div(a, b):
    return -(-a // b)


def compositions(total, parts, caps=None):
    '''
    Generate all sequences of non-negative integers of length `parts` summing to `total`.

    Parameters
    ----------
    total : int
    parts : int
    caps : list of int, optional
        Upper bound for each position

    Returns
    -------
    compositions : generator of tuple of int
    '''
    if parts == 0:
        if total == 0:
            yield ()
        return
    upper = total if caps is None else min(total, caps[0])
    for first in range(upper, -1, -1):
        rest_caps = None if caps is None else caps[1:]
        for rest in compositions(total - first, parts - 1, rest_caps):
            yield (first,) + rest


def first_persistent_onset(flags: Sequence[bool], indices: Optional[Sequence[int]] = None):
    '''
    Find the first index from which every flag is True through the end of the sequence.

    Parameters
    ----------
    flags : list of bool
    indices : list of int, optional
        The index attached to each flag. Default is 0, 1, 2, ...

    Returns
    -------
    onset : int or None
        None if the last flag is False or the sequence is empty
    '''
    if indices is None:
        indices = list(range(len(flags)))
    onset = None
    for idx, flag in zip(reversed(indices), reversed(flags)):
        if not flag:
            break
        onset = idx
    return onset


def chunked(iterable, chunk_size) -> Iterable[List]:
    '''
    Split any iterable into lists of at most `chunk_size` items, lazily.
    '''
    it = iter(iterable)
    while True:
        chunk = list(itertools.islice(it, chunk_size))
        if not chunk:
            return
        yield chunk
