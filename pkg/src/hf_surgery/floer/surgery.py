"""
Closed-form HF^+ of rational surgeries S^3_{p/q}(K), structure by
structure, from a KnotSurgeryModel.

The mapping cone for the structure i has slots n in Z; slot n carries a
copy of A^+_{k(n)}, k(n) = floor((i + pn)/q), mapping by v (a U-power
V_{k(n)}) to B^+ in slot n and by h (a U-power H_{k(n)}) to B^+ in slot
n + 1. Every map lowers the grading by one, so the gradings of the tower
generators are fixed by one anchor per sign of p.
"""

from collections import namedtuple
from fractions import Fraction

from hf_surgery.floer._errors import DomainError, WrongDispatchError, \
    InconsistentModelError
from hf_surgery.floer.floer_utils import ordered_map
from hf_surgery.floer.graded_module import FiniteCyclic, GradedModule, \
    u_annihilation_exponent, z2_dimensions, check_denominator
from hf_surgery.floer.lens_space import Slope, cone_index, lens_d

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


ConeSlot = namedtuple('ConeSlot', ['n', 'k', 'v', 'h', 'a_grading', 'b_grading'])

DInvariant = namedtuple('DInvariant', ['index', 'd', 'case'])


class SpincHF(object):
    """
    HF^+ of a surgery in one Spin^c structure.

    Parameters
    ----------

    index: int
        The label i (or k for the zero surgery).

    module: GradedModule
        The absolutely graded module; None for non-torsion structures of
        the zero surgery.

    d: Fraction
        The correction term, None unless there is exactly one tower.

    z2: dict
        {0: even, 1: odd} reduced dimensions, for zero-surgery structures.
    """
    def __init__(self, index, module=None, d=None, z2=None):
        if module is None and z2 is None:
            error_str = f"Structure {index} needs a module or a Z/2 table."
            logger.error(error_str)
            raise DomainError(error_str)
        self.index = index
        self.module = module
        self.d = Fraction(d) if d is not None else None
        self.z2 = dict(z2) if z2 is not None else None

    @property
    def reduced_dim(self):
        if self.module is not None:
            return self.module.reduced_dim
        return sum(self.z2.values())

    @property
    def u_exponent(self):
        """
        Annihilation exponent of the reduced part; None when only the
        Z/2 table is known.
        """
        if self.module is None:
            return None
        return u_annihilation_exponent(self.module)

    def z2_dimensions(self, flip=False):
        """
        Reduced dimensions by Z/2-grading, relative to the tower generator
        (or the stored table for zero surgeries). `flip` swaps the parities
        as in the convention used for negative surgeries.
        """
        if self.z2 is not None:
            dims = dict(self.z2)
        else:
            dims = z2_dimensions(self.module, self.d)
        if flip:
            dims = {0: dims[1], 1: dims[0]}
        return dims

    def __eq__(self, other):
        if not isinstance(other, SpincHF):
            return NotImplemented
        return (self.index, self.module, self.d, self.z2) == \
               (other.index, other.module, other.d, other.z2)

    def __repr__(self):
        body = str(self.module) if self.module is not None else f"z2={self.z2}"
        return f"SpincHF({self.index}: {body})"


class ManifoldHF(object):
    """
    HF^+ of a surgery in all Spin^c structures.

    Parameters
    ----------

    h1_order: int
        |H_1|, 0 for the zero surgery.

    structures: list of SpincHF
        One entry per structure with non-zero homology.

    slope: Slope
        The slope the manifold was computed at, when known.

    name: str
        Label for reports.
    """
    def __init__(self, h1_order, structures, slope=None, name=None):
        self.h1_order = h1_order
        self.structures = list(structures)
        self.slope = slope
        self.name = name or 'Y'

    @property
    def total_reduced_dim(self):
        return sum(s.reduced_dim for s in self.structures)

    def d_invariants(self):
        return [s.d for s in self.structures if s.d is not None]

    def structure(self, index):
        for s in self.structures:
            if s.index == index:
                return s
        error_str = f"{self.name} has no structure labelled {index}."
        logger.error(error_str)
        raise DomainError(error_str)

    def u_exponent(self):
        return max((s.u_exponent or 0 for s in self.structures), default=0)

    def is_lspace(self):
        return self.h1_order != 0 and self.total_reduced_dim == 0

    def z2_dimensions(self, flip=False):
        dims = {0: 0, 1: 0}
        for s in self.structures:
            for parity, dim in s.z2_dimensions(flip).items():
                dims[parity] += dim
        return dims

    def __eq__(self, other):
        if not isinstance(other, ManifoldHF):
            return NotImplemented
        return self.h1_order == other.h1_order and \
            self.structures == other.structures

    def __repr__(self):
        return f"ManifoldHF({self.name}, |H_1| = {self.h1_order}, " \
               f"dim HF_red = {self.total_reduced_dim})"


def _slope_for(p, q, i, sign):
    slope = Slope(p, q)
    if (sign > 0 and p <= 0) or (sign < 0 and p >= 0):
        error_str = f"Slope {slope} dispatched to the " \
                    f"{'positive' if sign > 0 else 'negative'} surgery formula."
        logger.error(error_str)
        raise WrongDispatchError(error_str)
    slope.check_index(i)
    return slope


def default_slots(model, slope):
    """
    Slots outside this range have |k(n)| >= g + 1, so neither their
    kernels nor their reduced groups contribute.
    """
    reach = (slope.q * (model.genus + 1)) // abs(slope.p) + 2
    return range(-reach, reach + 1)


def cone_slots(model, slope, i, slots=None):
    """
    The cone data for structure i: index, exponents and the gradings of
    the tower generators of A^+ and B^+ in each slot.

    The B gradings are anchored at d(L(p,q),i) - 1 in slot 0 for p > 0 and
    at d(L(p,q),i) in slot 1 for p < 0, and propagated by
    b(n+1) = b(n) + 2(H_{k(n)} - V_{k(n)}); in every slot
    a(n) = b(n) + 1 - 2V_{k(n)}.

    Parameters
    ----------

    model: KnotSurgeryModel
        The knot data.

    slope: Slope
        Non-zero slope.

    i: int
        Spin^c label.

    slots: iterable of int
        Slots to report; default_slots when None.

    Returns
    -------

    list of ConeSlot:
        One entry per requested slot, in order.
    """
    p, q = slope
    slots = list(default_slots(model, slope) if slots is None else slots)
    d_lens = lens_d(p, q, i)
    anchor, anchor_grading = (0, d_lens - 1) if p > 0 else (1, d_lens)
    lo, hi = min(slots + [anchor]), max(slots + [anchor])
    k = {n: cone_index(i, p, q, n) for n in range(lo, hi + 1)}
    step = {n: 2 * (model.h(k[n]) - model.v(k[n])) for n in k}
    b_grading = {anchor: anchor_grading}
    for n in range(anchor, hi):
        b_grading[n + 1] = b_grading[n] + step[n]
    for n in range(anchor - 1, lo - 1, -1):
        b_grading[n] = b_grading[n + 1] - step[n]
    return [ConeSlot(n, k[n], model.v(k[n]), model.h(k[n]),
                     b_grading[n] + 1 - 2 * model.v(k[n]), b_grading[n])
            for n in slots]


def _kernel_and_reduced(model, slots, skip=None):
    finites = []
    for s in slots:
        length = min(s.v, s.h)
        if s.n != skip and length > 0:
            finites.append(FiniteCyclic(s.a_grading, length))
        finites += model.red.finites_at(s.k, s.a_grading)
    return finites


def _remove_summand(finites, summand, model, where):
    if summand not in finites:
        error_str = f"{model.name}: {where} needs a reduced summand {summand} to " \
                    f"cancel against the cokernel, but there is none."
        logger.error(error_str)
        raise InconsistentModelError(error_str)
    finites = list(finites)
    finites.remove(summand)
    return finites


def _positive_case(p, q, i):
    """
    True when the tower of the kernel sits in slot 0, i.e.
    floor(i/q) <= -floor((i-p)/q).
    """
    return i // q <= -((i - p) // q)


def positive_surgery(model, p, q, i):
    """
    HF^+(S^3_{p/q}(K), i) for p > 0.

    Parameters
    ----------

    model: KnotSurgeryModel
        The knot data.

    p, q: int
        The slope, p > 0, q >= 1 coprime.

    i: int
        The label 0 <= i < p.

    Returns
    -------

    SpincHF:
        Tower at d(L(p,q),i) - 2 max(V_{floor(i/q)}, H_{floor((i-p)/q)}), one
        tau(min(V, H)) per slot other than the tower slot and one copy of
        the reduced group per slot.
    """
    slope = _slope_for(p, q, i, 1)
    slots = cone_slots(model, slope, i)
    by_n = {s.n: s for s in slots}
    d = lens_d(p, q, i) - 2 * max(by_n[0].v, by_n[-1].h)
    tower_slot = 0 if _positive_case(p, q, i) else -1
    module = GradedModule([d], _kernel_and_reduced(model, slots, skip=tower_slot))
    _check_gradings(module, 4 * p * q)
    return SpincHF(i, module, d)


def mirror_exponent(model, p, q, i):
    """
    N = max(V-bar_{floor(i/q)}, H-bar_{floor((i+p)/q)}) for p < 0; 0 for
    models with neither reduced groups nor mirror data.
    """
    if model.mirror_v is None and model.delta == 0:
        return 0
    mirror_v = model.mirror_vh()
    return max(mirror_v.v(i // q), mirror_v.h((i + p) // q))


def negative_surgery(model, p, q, i):
    """
    HF^+(S^3_{p/q}(K), i) for p < 0.

    Parameters
    ----------

    model: KnotSurgeryModel
        The knot data; needs mirror V-data if it has reduced groups.

    p, q: int
        The slope, p < 0, q >= 1 coprime.

    i: int
        The label 0 <= i < |p|.

    Returns
    -------

    SpincHF:
        Tower at d(L(p,q),i) + 2N, the kernel tau(min(V, H)) of every slot,
        and the reduced copies less one summand tau_{d(L(p,q),i)+1}(N).
    """
    slope = _slope_for(p, q, i, -1)
    slots = cone_slots(model, slope, i)
    d_lens = lens_d(p, q, i)
    n_exp = mirror_exponent(model, p, q, i)
    finites = _kernel_and_reduced(model, slots)
    if n_exp > 0:
        finites = _remove_summand(finites, FiniteCyclic(d_lens + 1, n_exp), model,
                                  f"slope {slope}, structure {i}")
    d = d_lens + 2 * n_exp
    module = GradedModule([d], finites)
    _check_gradings(module, 4 * abs(p) * q)
    return SpincHF(i, module, d)


def zero_surgery(model, k):
    """
    HF^+(S^3_0(K), k).

    For k != 0 only the Z/2-graded dimensions of tau(V_{|k|}) + A^red_k are
    known. For k = 0 there are towers at -1/2 + 2V-bar_0 and 1/2 - 2V_0 and
    A^red_0 placed above the second, less one summand tau_{1/2}(V-bar_0).

    Parameters
    ----------

    model: KnotSurgeryModel
        The knot data.

    k: int
        The structure, as the integer with c_1 = 2k.

    Returns
    -------

    SpincHF:
        The group in structure k.
    """
    if not isinstance(k, int):
        error_str = f"Zero surgery structures are integers, got {k!r}."
        logger.error(error_str)
        raise DomainError(error_str)
    if k != 0:
        dims = {0: model.v(abs(k)), 1: 0}
        for offset, length in model.red.summands(k):
            dims[offset % 2] += length
        return SpincHF(k, z2=dims)

    if model.mirror_v is None and model.delta == 0:
        mirror_v0 = 0
    else:
        mirror_v0 = model.mirror_vh().v(0)
    base = Fraction(1, 2) - 2 * model.v(0)
    finites = model.red.finites_at(0, base)
    if mirror_v0 > 0:
        finites = _remove_summand(finites, FiniteCyclic(Fraction(1, 2), mirror_v0),
                                  model, 'zero surgery')
    module = GradedModule([Fraction(-1, 2) + 2 * mirror_v0, base], finites)
    _check_gradings(module, 2)
    return SpincHF(0, module, z2=z2_dimensions(module, base))


def _check_gradings(module, bound):
    for t in module.towers:
        check_denominator(t.d, bound)
    for f in module.finites:
        check_denominator(f.d, bound)


def full_surgery(model, slope, pool_size=None):
    """
    HF^+ of S^3_{p/q}(K) in every Spin^c structure.

    Parameters
    ----------

    model: KnotSurgeryModel
        The knot data.

    slope: Slope
        The surgery slope.

    pool_size: int
        Size of the gevent pool the structures are spread over.

    Returns
    -------

    ManifoldHF:
        Structures 0..|p|-1, or -(g-1)..g-1 for the zero surgery.
    """
    p, q = slope
    logger.info(f"Computing {slope} surgery on {model.name}.")
    if p == 0:
        g = model.genus
        labels = range(-(g - 1), g) if g > 0 else [0]
        structures = ordered_map(lambda k: zero_surgery(model, k), labels, pool_size)
    else:
        per_structure = positive_surgery if p > 0 else negative_surgery
        structures = ordered_map(lambda i: per_structure(model, p, q, i),
                                 range(abs(p)), pool_size)
    y = ManifoldHF(abs(p), structures, slope=slope,
                   name=f"S^3_{slope}({model.name})")
    logger.info(f"{y.name}: dim HF_red = {y.total_reduced_dim}.")
    return y


def reduced_rank_formula(model, slope):
    """
    Total dimension of HF_red(S^3_{p/q}(K)) from the closed forms,
    q delta + q V_0 + 2q sum_{k >= 1} V_k minus the sum of the maxima
    max(V_{floor(i/q)}, H_{floor((i-p)/q)}) (p > 0), or of the mirror
    exponents N_i (p < 0).
    """
    p, q = slope
    if p == 0:
        error_str = 'The rank formula is for rational homology spheres, p != 0.'
        logger.error(error_str)
        raise DomainError(error_str)
    g = model.genus
    total = q * model.delta + q * model.v(0) + \
        2 * q * sum(model.v(k) for k in range(1, g))
    if p > 0:
        total -= sum(max(model.v(i // q), model.h((i - p) // q)) for i in range(p))
    else:
        total -= sum(mirror_exponent(model, p, q, i) for i in range(-p))
    return total


def d_invariant_profile(model, slope):
    """
    The correction terms of a surgery without building the modules.

    Returns
    -------

    list of DInvariant:
        (index, d, case) where case is 'V' or 'H' for p > 0 (the term
        attaining the maximum, 'V' on ties) and 'N' for p < 0.
    """
    p, q = slope
    if p == 0:
        error_str = 'The zero surgery has no correction terms in this sense.'
        logger.error(error_str)
        raise DomainError(error_str)
    profile = []
    for i in slope.spinc_range():
        d_lens = lens_d(p, q, i)
        if p > 0:
            v, h = model.v(i // q), model.h((i - p) // q)
            profile.append(DInvariant(i, d_lens - 2 * max(v, h), 'V' if v >= h else 'H'))
        else:
            profile.append(DInvariant(i, d_lens + 2 * mirror_exponent(model, p, q, i), 'N'))
    return profile


def lspace_slope(model, slope):
    """
    Whether the surgery at a non-zero slope is an L-space.
    """
    return reduced_rank_formula(model, slope) == 0
