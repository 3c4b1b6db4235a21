"""
Absolutely graded F[U]-modules made of towers T_d and finite cyclic
pieces tau_d(N). Gradings are exact Fractions; U lowers the grading by 2,
so tau_d(N) has basis gradings d, d+2, ..., d+2(N-1).
"""

from collections import Counter, namedtuple
from fractions import Fraction

from hf_surgery.floer._constants import SUMMAND_KIND_KEY, TOWER, FINITE, \
    D_KEY, LENGTH_KEY
from hf_surgery.floer._errors import InvalidGradingError, SchemaError
from hf_surgery.floer.floer_utils import as_rational, format_rational, \
    integer_offset

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


class TowerSummand(namedtuple('TowerSummand', ['d'])):
    """
    The tower T_d, with d the grading of its generator 1.
    """
    __slots__ = ()

    def __new__(cls, d):
        return super().__new__(cls, as_rational(d))

    def __str__(self):
        return f"T_{{{format_rational(self.d)}}}"


class FiniteCyclic(namedtuple('FiniteCyclic', ['d', 'length'])):
    """
    The finite ladder tau_d(N) spanned by 1, U^-1, ..., U^-(N-1); d is the
    grading of 1.
    """
    __slots__ = ()

    def __new__(cls, d, length):
        if not isinstance(length, int) or isinstance(length, bool) or length <= 0:
            error_str = f"A finite cyclic summand needs a positive integer " \
                        f"length, got {length!r}."
            logger.error(error_str)
            raise InvalidGradingError(error_str)
        return super().__new__(cls, as_rational(d), length)

    def gradings(self):
        """
        Gradings of the basis elements, bottom first.
        """
        return [self.d + 2 * j for j in range(self.length)]

    @property
    def top(self):
        return self.d + 2 * (self.length - 1)

    def __str__(self):
        return f"tau_{{{format_rational(self.d)}}}({self.length})"


def _summand_key(summand):
    if isinstance(summand, TowerSummand):
        return (0, summand.d, 0)
    return (1, summand.d, summand.length)


class GradedModule(object):
    """
    A multiset of towers and finite cyclic summands. Equality ignores the
    order in which summands were supplied.

    Parameters
    ----------

    towers: iterable of TowerSummand (or gradings)
        The infinite summands.

    finites: iterable of FiniteCyclic (or (d, length) pairs)
        The reduced part.
    """
    def __init__(self, towers=(), finites=()):
        towers = [t if isinstance(t, TowerSummand) else TowerSummand(t)
                  for t in towers]
        finites = [f if isinstance(f, FiniteCyclic) else FiniteCyclic(*f)
                   for f in finites]
        self._towers = tuple(sorted(towers, key=_summand_key))
        self._finites = tuple(sorted(finites, key=_summand_key))

    @property
    def towers(self):
        return self._towers

    @property
    def finites(self):
        return self._finites

    @property
    def reduced_dim(self):
        return sum(f.length for f in self._finites)

    @property
    def d(self):
        """
        Grading of the tower when there is exactly one, else None.
        """
        if len(self._towers) == 1:
            return self._towers[0].d
        return None

    def is_trivially_reduced(self):
        return not self._finites

    def grading_table(self, ceiling=None):
        """
        Dimension of the module in each grading. Towers are infinite, so
        they are only counted up to `ceiling` (and skipped when it is None).

        Parameters
        ----------

        ceiling: Fraction
            Largest grading to report tower elements in.

        Returns
        -------

        Counter:
            grading -> dimension
        """
        table = Counter()
        for f in self._finites:
            for g in f.gradings():
                if ceiling is None or g <= ceiling:
                    table[g] += 1
        if ceiling is not None:
            for t in self._towers:
                g = t.d
                while g <= ceiling:
                    table[g] += 1
                    g += 2
        return table

    def to_list(self):
        """
        Serializes the module as a list of {kind, d, length} dictionaries.
        """
        summands = [{SUMMAND_KIND_KEY: TOWER, D_KEY: format_rational(t.d)}
                    for t in self._towers]
        summands += [{SUMMAND_KIND_KEY: FINITE, D_KEY: format_rational(f.d),
                      LENGTH_KEY: f.length} for f in self._finites]
        return summands

    @classmethod
    def from_list(cls, summands, field='summands'):
        """
        Inverse of to_list.
        """
        if not isinstance(summands, list):
            raise SchemaError(field, 'expected a list of summands')
        towers, finites = [], []
        for n, summand in enumerate(summands):
            where = f"{field}[{n}]"
            if not isinstance(summand, dict) or D_KEY not in summand:
                raise SchemaError(where, "summand needs a 'd' entry")
            try:
                d = as_rational(summand[D_KEY])
                if summand.get(SUMMAND_KIND_KEY) == TOWER:
                    towers.append(TowerSummand(d))
                elif summand.get(SUMMAND_KIND_KEY) == FINITE:
                    finites.append(FiniteCyclic(d, summand.get(LENGTH_KEY)))
                else:
                    raise SchemaError(where, f"unknown summand kind "
                                             f"{summand.get(SUMMAND_KIND_KEY)!r}")
            except InvalidGradingError as e:
                raise SchemaError(where, str(e))
        return cls(towers, finites)

    def __eq__(self, other):
        if not isinstance(other, GradedModule):
            return NotImplemented
        return self._towers == other._towers and self._finites == other._finites

    def __hash__(self):
        return hash((self._towers, self._finites))

    def __add__(self, other):
        return direct_sum(self, other)

    def __repr__(self):
        return f"GradedModule({self})"

    def __str__(self):
        parts = [str(s) for s in self._towers + self._finites]
        return ' + '.join(parts) if parts else '0'


def direct_sum(a, b):
    """
    Multiset union of two graded modules.
    """
    return GradedModule(a.towers + b.towers, a.finites + b.finites)


def u_annihilation_exponent(m):
    """
    Least N with U^N killing the reduced part of m.

    Parameters
    ----------

    m: GradedModule
        The module.

    Returns
    -------

    int:
        The longest finite summand, 0 if there is none.
    """
    return max((f.length for f in m.finites), default=0)


def z2_euler_characteristic(m, reference):
    """
    Euler characteristic of the reduced part, each basis element counted
    with the sign (-1)^(grading - reference). Towers are left out.

    Parameters
    ----------

    m: GradedModule
        The module.

    reference: Fraction
        Grading taken to be even; all gradings must differ from it by
        integers.

    Returns
    -------

    int:
        The signed count.
    """
    reference = as_rational(reference)
    chi = 0
    for f in m.finites:
        offset = integer_offset(f.d, reference)
        # U preserves parity so the whole ladder has the sign of its bottom
        chi += f.length if offset % 2 == 0 else -f.length
    return chi


def z2_dimensions(m, reference, flip=False):
    """
    Dimensions of the reduced part in the even and odd Z/2-gradings
    relative to `reference`.

    Parameters
    ----------

    m: GradedModule
        The module.

    reference: Fraction
        Grading taken to be even.

    flip: bool
        Swap the two parities, which is the convention for negative
        surgeries.

    Returns
    -------

    dict:
        {0: even dimension, 1: odd dimension}
    """
    reference = as_rational(reference)
    dims = {0: 0, 1: 0}
    for f in m.finites:
        p = (integer_offset(f.d, reference) + int(flip)) % 2
        dims[p] += f.length
    return dims


def check_denominator(grading, bound):
    """
    Asserts that the denominator of a produced grading divides `bound`.
    """
    if bound % Fraction(grading).denominator != 0:
        error_str = f"Grading {format_rational(grading)} has a denominator " \
                    f"not dividing {bound}."
        logger.error(error_str)
        raise InvalidGradingError(error_str)
