"""
Numerical invariants of a rational homology sphere Y that bound the knots
and slopes with S^3_{p/q}(K) = Y: n(Y), M(Y, q), c(Y) and what follows
from them.
"""

from fractions import Fraction
from math import gcd

from hf_surgery.floer._errors import DomainError
from hf_surgery.floer.lens_space import Slope, lens_d

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


def _check_qhs(y):
    if y.h1_order == 0:
        error_str = f"{y.name} is not a rational homology sphere."
        logger.error(error_str)
        raise DomainError(error_str)


def slope_denominator_bound(y):
    """
    n(Y) = |H_1(Y)| + dim HF_red(Y), a bound on the denominator of any
    surgery slope producing Y.
    """
    _check_qhs(y)
    return y.h1_order + y.total_reduced_dim


def m_invariant(y, q):
    """
    M(Y, q) = (sum_i d(L(p, q), i) - sum_s d(Y, s)) / 2 with p = |H_1(Y)|.

    Parameters
    ----------

    y: ManifoldHF
        The manifold; every structure must have a correction term.

    q: int
        Positive and coprime to p.

    Returns
    -------

    Fraction:
        The exact value.
    """
    _check_qhs(y)
    p = y.h1_order
    if not isinstance(q, int) or q < 1 or gcd(p, q) != 1:
        error_str = f"M(Y, q) needs a positive q coprime to {p}, got {q!r}."
        logger.error(error_str)
        raise DomainError(error_str)
    d_values = y.d_invariants()
    if len(d_values) != p:
        error_str = f"{y.name} has {len(d_values)} correction terms, expected {p}."
        logger.error(error_str)
        raise DomainError(error_str)
    lens_sum = sum((lens_d(p, q, i) for i in range(p)), Fraction(0))
    return (lens_sum - sum(d_values, Fraction(0))) / 2


def c_invariant(y):
    """
    c(Y) = max over 1 <= q <= n(Y) coprime to |H_1(Y)| of
    (dim HF_red(Y) + M(Y, q)) / q.
    """
    n = slope_denominator_bound(y)
    p = y.h1_order
    values = [(y.total_reduced_dim + m_invariant(y, q)) / q
              for q in range(1, n + 1) if gcd(p, q) == 1]
    return max(values)


def alternating_genus_bound(y):
    """
    floor(3 c(Y)), a bound on the genus of an alternating knot with a
    surgery giving Y.
    """
    c = c_invariant(y)
    return (3 * c).numerator // (3 * c).denominator


def candidate_slopes(y):
    """
    Every slope +-p/q with p = |H_1(Y)|, q <= n(Y) and gcd(p, q) = 1, positive
    slopes first and smaller denominators first.
    """
    p = y.h1_order
    _check_qhs(y)
    qs = [q for q in range(1, slope_denominator_bound(y) + 1) if gcd(p, q) == 1]
    return [Slope(p, q) for q in qs] + [Slope(-p, q) for q in qs]
