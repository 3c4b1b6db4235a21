"""
Surgery slopes, the cone index k(n) = floor((i + pn)/q) and the correction
terms of lens spaces.
"""

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from math import gcd

from hf_surgery.floer._errors import DomainError

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


class Slope(namedtuple('Slope', ['p', 'q'])):
    """
    A surgery coefficient p/q in lowest terms with q >= 1. The slope 0 is
    0/1. Non-reduced fractions are refused since they name a different
    H_1.
    """
    __slots__ = ()

    def __new__(cls, p, q=1):
        if any(not isinstance(x, int) or isinstance(x, bool) for x in (p, q)):
            error_str = f"Slope entries must be integers, got {p!r}/{q!r}."
            logger.error(error_str)
            raise DomainError(error_str)
        if q == 0:
            error_str = f"The slope {p}/0 is the trivial filling, not a surgery."
            logger.error(error_str)
            raise DomainError(error_str)
        if q < 0:
            p, q = -p, -q
        if p == 0 and q != 1:
            error_str = f"The zero slope is written 0/1, got 0/{q}."
            logger.error(error_str)
            raise DomainError(error_str)
        if gcd(p, q) != 1:
            error_str = f"Slope {p}/{q} is not in lowest terms."
            logger.error(error_str)
            raise DomainError(error_str)
        return super().__new__(cls, p, q)

    @classmethod
    def parse(cls, text):
        """
        Reads "p/q" or "p".
        """
        text = str(text).strip()
        try:
            if '/' in text:
                p, q = text.split('/')
                return cls(int(p), int(q))
            return cls(int(text), 1)
        except ValueError:
            error_str = f"Cannot read {text!r} as a slope p/q."
            logger.error(error_str)
            raise DomainError(error_str)

    @property
    def h1_order(self):
        return abs(self.p)

    def spinc_range(self):
        """
        The Spin^c labels 0 <= i < |p| of a non-zero slope.
        """
        if self.p == 0:
            error_str = 'Zero surgery structures are labelled by k, not i.'
            logger.error(error_str)
            raise DomainError(error_str)
        return range(abs(self.p))

    def check_index(self, i):
        if not isinstance(i, int) or not 0 <= i < abs(self.p):
            error_str = f"Spin^c index {i!r} is outside 0 <= i < {abs(self.p)} " \
                        f"for slope {self}."
            logger.error(error_str)
            raise DomainError(error_str)
        return i

    def __neg__(self):
        return Slope(-self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


def cone_index(i, p, q, n):
    """
    The index k(n) = floor((i + pn)/q) of the knot complex used in slot n of
    the mapping cone for structure i.
    """
    return (i + p * n) // q


def _check_lens(p, q, i):
    if q < 1 or p == 0 or gcd(p, q) != 1:
        error_str = f"L({p},{q}) needs q >= 1, p != 0 and gcd(p, q) = 1."
        logger.error(error_str)
        raise DomainError(error_str)
    if not 0 <= i < abs(p):
        error_str = f"Spin^c index {i} outside 0 <= i < {abs(p)} for L({p},{q})."
        logger.error(error_str)
        raise DomainError(error_str)


def lens_d_trace(p, q, i):
    """
    The sequence of (p, q, i) visited by the lens space recursion, ending
    at the base case (1, 0, 0).
    """
    _check_lens(abs(p), q, i)
    p = abs(p)
    trace = [(p, q, i)]
    while q != 0:
        p, q, i = q, p % q, i % q
        trace.append((p, q, i))
    return trace


@lru_cache(maxsize=None)
def _lens_d_positive(p, q, i):
    if q == 0:
        return Fraction(0)
    return Fraction(-1, 4) + Fraction((2 * i + 1 - p - q) ** 2, 4 * p * q) \
        - _lens_d_positive(q, p % q, i % q)


def lens_d(p, q, i):
    """
    Correction term of the lens space obtained by p/q surgery on the
    unknot in the structure labelled i.

    Parameters
    ----------

    p: int
        Non-zero numerator; negative p gives the orientation reverse of
        L(|p|, q), so its values are negated.

    q: int
        Positive, coprime to p.

    i: int
        Spin^c label, 0 <= i < |p|.

    Returns
    -------

    Fraction:
        The exact correction term.
    """
    _check_lens(p, q, i)
    if p < 0:
        return -_lens_d_positive(-p, q, i)
    return _lens_d_positive(p, q, i)
