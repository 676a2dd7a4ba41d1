#!/usr/bin/env python3

import os

import pytest

from mintk.utils import ceil_log2, ceil_div, compositions, first_persistent_onset, chunked

cwd = os.path.dirname(os.path.abspath(__file__))


def test_ceil():
    assert [ceil_log2(n) for n in range(1, 10)] == [0, 1, 2, 2, 3, 3, 3, 3, 4]
    with pytest.raises(ValueError):
        ceil_log2(0)
    assert ceil_div(7, 2) == 4
    assert ceil_div(6, 3) == 2
    assert ceil_div(0, 5) == 0


def test_compositions():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(3, 2, [1, 3])) == [(1, 2), (0, 3)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(1, 0)) == []
    assert len(list(compositions(4, 3))) == 15


def test_onset():
    assert first_persistent_onset([False, True, False, True, True]) == 3
    assert first_persistent_onset([True, True]) == 0
    assert first_persistent_onset([True, False]) is None
    assert first_persistent_onset([]) is None
    assert first_persistent_onset([False, True, True], [2, 4, 6]) == 4


def test_chunked():
    assert list(chunked(range(5), 2)) == [[0, 1], [2, 3], [4]]
    assert list(chunked([], 3)) == []
