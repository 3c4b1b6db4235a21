"""
Helpers shared by the floer modules: exact rationals and their text form,
parity and the gevent pool used to fan out independent computations.
"""

from fractions import Fraction

from gevent.pool import Pool

from hf_surgery.floer._errors import InvalidGradingError

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


def as_rational(value):
    """
    Converts an int, a Fraction or an "a/b" string to a Fraction.
    Floats are refused since every grading in the package is exact.

    Parameters
    ----------

    value: int, Fraction or str
        The value to convert.

    Returns
    -------

    Fraction:
        The exact value.
    """
    if isinstance(value, (bool, float)):
        error_str = f"Refusing inexact value {value!r} as a rational."
        logger.error(error_str)
        raise InvalidGradingError(error_str)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    error_str = f"Cannot read {value!r} as an exact rational."
    logger.error(error_str)
    raise InvalidGradingError(error_str)


def format_rational(value):
    """
    Prints a rational as "a/b" in lowest terms, with b >= 1 (integers
    become "a/1").
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def integer_offset(value, reference):
    """
    Returns value - reference as an int, raising InvalidGradingError when
    the difference is not integral.
    """
    diff = Fraction(value) - Fraction(reference)
    if diff.denominator != 1:
        error_str = f"Grading {format_rational(value)} is not an integer " \
                    f"away from {format_rational(reference)}."
        logger.error(error_str)
        raise InvalidGradingError(error_str)
    return diff.numerator


def parity(value):
    """
    Parity of an integer as 0 or 1.
    """
    return value % 2


def ordered_map(func, items, pool_size=None):
    """
    Applies func to every item on a gevent pool and returns the results in
    input order.

    Parameters
    ----------

    func: callable
        Function of one argument.

    items: iterable
        The arguments.

    pool_size: int
        Number of greenlets; None or 1 runs inline.

    Returns
    -------

    list:
        [func(item) for item in items]
    """
    items = list(items)
    if not pool_size or pool_size <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    pool = Pool(pool_size)
    return list(pool.imap(func, items))
