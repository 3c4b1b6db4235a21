"""
Dense linear algebra over the prime field F_p on numpy int64 arrays:
row-echelon form, rank and nullity by Gaussian elimination with modular
inverses. Nothing here touches floating point.
"""

import numpy as np

from hf_surgery.floer._errors import DomainError

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


def is_prime(n):
    if not isinstance(n, int) or n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def check_characteristic(p):
    """
    Returns p if it is a prime, otherwise raises DomainError.
    """
    if not is_prime(p):
        error_str = f"The characteristic must be a prime, got {p!r}."
        logger.error(error_str)
        raise DomainError(error_str)
    return p


def row_echelon_mod_p(m, p):
    """
    Row-reduces a matrix over F_p.

    Parameters
    ----------

    m: array-like
        Integer matrix (rows x cols); entries are reduced mod p first.

    p: int
        The prime.

    Returns
    -------

    numpy.ndarray, list:
        The echelon form (pivot rows scaled to 1) and the pivot columns.
    """
    r = np.atleast_2d(np.array(m, dtype=np.int64)) % p
    rows, cols = r.shape
    pivot_cols = []
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        nonzero = np.nonzero(r[pivot_row:, col])[0]
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            r[[pivot_row, found]] = r[[found, pivot_row]]
        inv = pow(int(r[pivot_row, col]), -1, p)
        r[pivot_row] = (r[pivot_row] * inv) % p
        below = np.nonzero(r[pivot_row + 1:, col])[0] + pivot_row + 1
        if below.size:
            factors = r[below, col].reshape((-1, 1))
            r[below] = (r[below] - factors * r[pivot_row]) % p
        pivot_cols.append(col)
        pivot_row += 1
    return r, pivot_cols


def rank_mod_p(m, p):
    """
    Rank of an integer matrix over F_p; empty matrices have rank 0.
    """
    m = np.asarray(m, dtype=np.int64)
    if m.size == 0:
        return 0
    _, pivot_cols = row_echelon_mod_p(m, p)
    return len(pivot_cols)


def nullity_mod_p(m, p):
    """
    Dimension of the kernel of the map x -> m x over F_p.
    """
    m = np.asarray(m, dtype=np.int64)
    cols = m.shape[1] if m.ndim == 2 else 0
    return cols - rank_mod_p(m, p)
