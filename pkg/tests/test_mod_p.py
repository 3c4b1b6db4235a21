"""
Tests for Gaussian elimination over F_p.
"""

import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from hf_surgery.floer import DomainError
from hf_surgery.oracle import row_echelon_mod_p, rank_mod_p, nullity_mod_p
from hf_surgery.oracle.mod_p import is_prime, check_characteristic


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert check_characteristic(3) == 3
    for bad in (1, 4, 2.0):
        with pytest.raises(DomainError):
            check_characteristic(bad)


def test_rank_depends_on_characteristic():
    m = [[1, 2], [2, 1]]
    assert rank_mod_p(m, 3) == 1
    assert rank_mod_p(m, 5) == 2
    assert rank_mod_p([[1, 1], [1, 1]], 2) == 1
    assert rank_mod_p([[2, 4]], 2) == 0


def test_empty_and_vector_inputs():
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64), 2) == 0
    assert rank_mod_p([1, 0, 1], 2) == 1
    assert nullity_mod_p(np.zeros((2, 3), dtype=np.int64), 5) == 3


def test_row_echelon():
    r, pivots = row_echelon_mod_p([[0, 2, 1], [3, 1, 0]], 5)
    assert pivots == [0, 1]
    assert r[0, 0] == 1 and r[1, 1] == 1
    assert r[1, 0] == 0


@given(st.integers(0, 2 ** 32 - 1), st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=100, deadline=None)
def test_rank_properties(seed, p):
    rng = np.random.default_rng(seed)
    rows, cols = rng.integers(1, 7, size=2)
    m = rng.integers(0, p, size=(rows, cols))
    rank = rank_mod_p(m, p)
    assert rank == rank_mod_p(m.T, p)
    assert rank <= min(rows, cols)
    assert rank + nullity_mod_p(m, p) == cols
    assert rank_mod_p(np.vstack([m, m]), p) == rank
