"""
Finite truncations of the mapping cone over F_p.

The A row holds, in each slot n of the window, the tower of A^+_{k(n)}
cut to its first `height` elements plus any attached reduced summands;
the B row holds the towers of B^+ in slots n and n + 1. The differential
is D = v + h from A to B; the cone has no other differential, so its
homology in grading g is ker(D on A_g) + coker(D from A_{g+1} into B_g).
"""

from collections import Counter, defaultdict, namedtuple
from fractions import Fraction

import numpy as np

from hf_surgery.floer._errors import DomainError
from hf_surgery.floer.surgery import ConeSlot
from hf_surgery.oracle.mod_p import check_characteristic, rank_mod_p

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

ROW_A = 'A'
ROW_B = 'B'
TOWER = 'T'

BasisElement = namedtuple('BasisElement', ['slot', 'row', 'summand', 'power', 'grading'])

# summand is a FiniteCyclic placed in the A row of `slot`; v_coeff scales
# its map into B_slot and h_coeff its map into B_{slot+1}
AttachedSummand = namedtuple('AttachedSummand', ['slot', 'summand', 'v_coeff', 'h_coeff'])


def abstract_slots(a, b, slots, b_anchor=0):
    """
    ConeSlot data for abstract exponent sequences, with k(n) = n and the
    B generator of the first slot in grading `b_anchor`.

    Parameters
    ----------

    a, b: callable
        n -> a_n (the v exponent) and n -> b_n (the h exponent).

    slots: iterable of int
        Consecutive slot labels.

    b_anchor: Fraction
        Grading of 1 in B of the first slot.

    Returns
    -------

    list of ConeSlot:
        The slots.
    """
    result = []
    b_grading = Fraction(b_anchor)
    for n in slots:
        result.append(ConeSlot(n, n, a(n), b(n), b_grading + 1 - 2 * a(n), b_grading))
        b_grading += 2 * (b(n) - a(n))
    return result


def attached_power(summand, b_bottom, j):
    """
    Image of U^-j (in a finite summand) under the U-equivariant map sending
    the top of the summand to U^-s in the tower with generator grading
    b_bottom, s fixed by the grading. None when the image is zero.
    """
    twice_s = summand.top - 1 - Fraction(b_bottom)
    if twice_s.denominator != 1 or twice_s.numerator % 2 != 0:
        return None
    s = twice_s.numerator // 2
    if s < 0 or s >= summand.length:
        return None
    power = s - (summand.length - 1 - j)
    return power if power >= 0 else None


class TruncatedCone(object):
    """
    A truncated cone: the A and B bases and the matrix of D over F_p.

    Parameters
    ----------

    slots: list of ConeSlot
        Consecutive A slots of the window.

    height: int
        Number of elements kept in each tower.

    characteristic: int
        The prime p.

    a_basis, b_basis: list of BasisElement
        The bases.

    differential: numpy.ndarray
        len(b_basis) x len(a_basis) matrix with entries in [0, p).

    ceiling: Fraction
        Largest grading kept, None when only the height truncates.
    """
    def __init__(self, slots, height, characteristic, a_basis, b_basis,
                 differential, ceiling=None):
        self.slots = slots
        self.height = height
        self.characteristic = characteristic
        self.a_basis = a_basis
        self.b_basis = b_basis
        self.differential = differential
        self.ceiling = ceiling

    @property
    def window(self):
        return self.slots[0].n, self.slots[-1].n

    @property
    def size(self):
        return len(self.a_basis) + len(self.b_basis)

    def basis_table(self):
        """
        Number of basis elements in each grading.
        """
        return Counter(e.grading for e in self.a_basis + self.b_basis)

    def full_differential(self):
        """
        The differential of the whole cone on the basis a_basis + b_basis.
        """
        n_a, n_b = len(self.a_basis), len(self.b_basis)
        d = np.zeros((n_a + n_b, n_a + n_b), dtype=np.int64)
        d[n_a:, :n_a] = self.differential
        return d

    def check_square_zero(self):
        d = self.full_differential()
        return not np.any((d @ d) % self.characteristic)

    def _u_matrix(self, basis):
        index = {(e.slot, e.summand, e.power): c for c, e in enumerate(basis)}
        u = np.zeros((len(basis), len(basis)), dtype=np.int64)
        for c, e in enumerate(basis):
            r = index.get((e.slot, e.summand, e.power - 1))
            if r is not None:
                u[r, c] = 1
        return u

    def is_u_equivariant(self):
        """
        Whether D commutes with the action of U on the truncated ladders.
        """
        du = self.differential @ self._u_matrix(self.a_basis)
        ud = self._u_matrix(self.b_basis) @ self.differential
        return not np.any((du - ud) % self.characteristic)


def build_cone(slots, height, characteristic=2, attached=(), ceiling=None):
    """
    Builds the truncated cone.

    Parameters
    ----------

    slots: list of ConeSlot
        Consecutive A slots; B runs over the same slots and one more.

    height: int
        Elements kept per tower, M >= 1.

    characteristic: int
        The prime p.

    attached: iterable of AttachedSummand
        Reduced summands with the coefficients of their maps into B.

    ceiling: Fraction
        When given, only elements of grading at most `ceiling` are kept,
        which makes the result a subcomplex of the untruncated cone.

    Returns
    -------

    TruncatedCone:
        The cone.
    """
    p = check_characteristic(characteristic)
    slots = list(slots)
    attached = list(attached)
    if not slots or [s.n for s in slots] != list(range(slots[0].n, slots[-1].n + 1)):
        error_str = 'A cone needs a non-empty run of consecutive slots.'
        logger.error(error_str)
        raise DomainError(error_str)
    if any(s.v < 0 or s.h < 0 for s in slots):
        error_str = 'The exponents of v and h must be non-negative.'
        logger.error(error_str)
        raise DomainError(error_str)
    if not isinstance(height, int) or height < 1:
        error_str = f"The tower height must be a positive integer, got {height!r}."
        logger.error(error_str)
        raise DomainError(error_str)
    by_slot = {s.n: s for s in slots}
    if any(att.slot not in by_slot for att in attached):
        error_str = 'Reduced summands can only be attached inside the window.'
        logger.error(error_str)
        raise DomainError(error_str)

    b_bottom = {s.n: s.b_grading for s in slots}
    last = slots[-1]
    b_bottom[last.n + 1] = last.b_grading + 2 * (last.h - last.v)

    def kept(grading):
        return ceiling is None or grading <= ceiling

    a_basis, b_basis = [], []
    for s in slots:
        a_basis += [BasisElement(s.n, ROW_A, TOWER, j, s.a_grading + 2 * j)
                    for j in range(height) if kept(s.a_grading + 2 * j)]
    for idx, att in enumerate(attached):
        a_basis += [BasisElement(att.slot, ROW_A, idx, j, g)
                    for j, g in enumerate(att.summand.gradings()) if kept(g)]
    for n in sorted(b_bottom):
        b_basis += [BasisElement(n, ROW_B, TOWER, j, b_bottom[n] + 2 * j)
                    for j in range(height) if kept(b_bottom[n] + 2 * j)]

    b_index = {(e.slot, e.power): r for r, e in enumerate(b_basis)}
    d = np.zeros((len(b_basis), len(a_basis)), dtype=np.int64)
    for c, e in enumerate(a_basis):
        if e.summand == TOWER:
            s = by_slot[e.slot]
            for target, shift in ((e.slot, s.v), (e.slot + 1, s.h)):
                r = b_index.get((target, e.power - shift))
                if e.power >= shift and r is not None:
                    d[r, c] = (d[r, c] + 1) % p
        else:
            att = attached[e.summand]
            for target, coeff in ((att.slot, att.v_coeff), (att.slot + 1, att.h_coeff)):
                if coeff % p == 0:
                    continue
                power = attached_power(att.summand, b_bottom[target], e.power)
                r = b_index.get((target, power)) if power is not None else None
                if r is not None:
                    d[r, c] = (d[r, c] + coeff) % p
    logger.debug(f"Built cone on slots {slots[0].n}..{slots[-1].n}, height {height}: "
                 f"{len(a_basis)} + {len(b_basis)} generators.")
    return TruncatedCone(slots, height, p, a_basis, b_basis, d, ceiling)


def homology(cone):
    """
    Dimension of the homology of a truncated cone in each grading.

    Parameters
    ----------

    cone: TruncatedCone
        The cone.

    Returns
    -------

    Counter:
        grading -> dim ker(D on A_g) + dim coker(D: A_{g+1} -> B_g), zero
        entries omitted.
    """
    a_cols, b_rows = defaultdict(list), defaultdict(list)
    for c, e in enumerate(cone.a_basis):
        a_cols[e.grading].append(c)
    for r, e in enumerate(cone.b_basis):
        b_rows[e.grading].append(r)

    ranks = {}

    def block_rank(g):
        # rank of D from A_{g+1} into B_g
        if g not in ranks:
            rows, cols = b_rows.get(g, []), a_cols.get(g + 1, [])
            ranks[g] = rank_mod_p(cone.differential[np.ix_(rows, cols)],
                                  cone.characteristic) if rows and cols else 0
        return ranks[g]

    table = Counter()
    for g in set(a_cols) | set(b_rows):
        dim = len(a_cols.get(g, [])) - block_rank(g - 1) + \
            len(b_rows.get(g, [])) - block_rank(g)
        if dim:
            table[g] = dim
    return table
