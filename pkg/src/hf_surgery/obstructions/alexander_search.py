"""
Finite search for the Alexander polynomials an alternating knot with a
surgery to Y could have, given c(Y).
"""

from collections import namedtuple
from math import floor

from hf_surgery.floer.floer_utils import ordered_map
from hf_surgery.floer.knot_model import alexander_from_torsion, torsion_coefficients
from hf_surgery.obstructions.manifold_invariants import c_invariant

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

Candidate = namedtuple('Candidate', ['alexander', 'torsion', 'determinant'])


class EnumerationResult(object):
    """
    Candidates of an enumeration, with a marker set when the
    `max_candidates` cap cut it short.
    """
    def __init__(self, bound, length, candidates, truncated=False):
        self.bound = bound
        self.length = length
        self.candidates = candidates
        self.truncated = truncated

    def polynomials(self):
        return [c.alexander for c in self.candidates]

    def to_dict(self):
        return {'c': str(self.bound), 'torsion_length': self.length,
                'truncated': self.truncated, 'count': len(self.candidates),
                'candidates': [{'alexander': c.alexander.coefficients(),
                                'torsion': list(c.torsion),
                                'determinant': c.determinant}
                               for c in self.candidates]}


def torsion_sequences(length, total):
    """
    All integer sequences of the given length whose absolute values sum to
    at most `total`, in a fixed order.
    """
    if length == 0:
        yield ()
        return
    for head in range(-total, total + 1):
        for rest in torsion_sequences(length - 1, total - abs(head)):
            yield (head,) + rest


def murasugi_nonvanishing(alex):
    """
    a_i != 0 for 0 <= i <= deg Delta.
    """
    return all(a != 0 for a in alex.coefficients())


def no_three_zero_torsion(alex):
    """
    No three consecutive vanishing torsion coefficients below the degree.
    """
    t = torsion_coefficients(alex)[:alex.degree]
    return not any(t[i] == t[i + 1] == t[i + 2] == 0 for i in range(len(t) - 2))


def _candidate(torsion):
    alex = alexander_from_torsion(torsion)
    if not alex.is_normalized() or not murasugi_nonvanishing(alex) or \
            not no_three_zero_torsion(alex):
        return None
    return Candidate(alex, tuple(torsion_coefficients(alex)[:alex.degree]),
                     alex.determinant())


def enumerate_from_bound(c, max_candidates=None, pool_size=None):
    """
    Enumerates torsion sequences t_0, ..., t_{L-1} with L = floor(3c) and
    sum |t_i| <= c, keeping the polynomials that pass the normalization,
    Murasugi and three-zeros filters.

    Parameters
    ----------

    c: Fraction
        The bound c(Y).

    max_candidates: int
        Stop after this many surviving polynomials.

    pool_size: int
        gevent pool size; the search is split by the value of t_0.

    Returns
    -------

    EnumerationResult:
        Distinct candidates sorted by degree then coefficients.
    """
    length = max(floor(3 * c), 0)
    total = max(floor(c), 0)

    def chunk(head):
        found = []
        if length == 0:
            return [_candidate(())] if head == 0 else []
        for rest in torsion_sequences(length - 1, total - abs(head)):
            found.append(_candidate((head,) + rest))
        return found

    seen = {}
    truncated = False
    for batch in ordered_map(chunk, range(-total, total + 1), pool_size):
        for cand in batch:
            if cand is None or cand.alexander in seen:
                continue
            if max_candidates is not None and len(seen) >= max_candidates:
                truncated = True
                break
            seen[cand.alexander] = cand
        if truncated:
            break
    candidates = sorted(seen.values(),
                        key=lambda c: (c.alexander.degree, c.alexander.coefficients()))
    logger.info(f"Enumerated {len(candidates)} Alexander polynomials for c = {c}"
                f"{' (truncated)' if truncated else ''}.")
    return EnumerationResult(c, length, candidates, truncated)


def enumerate_alternating_alexander(y, max_candidates=None, pool_size=None):
    """
    The candidate Alexander polynomials of alternating knots with a surgery
    giving Y.
    """
    return enumerate_from_bound(c_invariant(y), max_candidates, pool_size)
