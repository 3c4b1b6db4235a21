"""
Knot-side input of the surgery formula: the V/H sequences, the reduced
groups A^red_k, the Alexander polynomial and its torsion coefficients,
together with a report-based validator of their structural properties.
"""

from collections import namedtuple

from hf_surgery.floer._constants import MONOTONICITY, NON_NEGATIVITY, \
    CONJUGATION, REDUCED_LENGTH, REDUCED_SYMMETRY, REDUCED_SUPPORT, EULER, \
    NORMALIZATION, ALEXANDER_DEGREE, HFK_PARITY, MIRROR
from hf_surgery.floer._errors import DomainError, NotAnLSpaceKnotError, \
    InsufficientDataError
from hf_surgery.floer.floer_utils import parity
from hf_surgery.floer.graded_module import FiniteCyclic

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


Violation = namedtuple('Violation', ['name', 'detail'])


def _check_int(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        error_str = f"{what} must be an integer, got {value!r}."
        logger.error(error_str)
        raise DomainError(error_str)
    return value


class AlexanderPolynomial(object):
    """
    Symmetrized Alexander polynomial a_0 + sum_i a_i (T^i + T^-i), stored
    by its coefficients with non-negative index.

    Parameters
    ----------

    coefficients: dict or list
        Either {i: a_i} for i >= 0 or the list [a_0, a_1, ...].
    """
    def __init__(self, coefficients):
        if isinstance(coefficients, (list, tuple)):
            coefficients = dict(enumerate(coefficients))
        coeffs = {}
        for i, a in coefficients.items():
            i = _check_int(i, 'Alexander polynomial index')
            a = _check_int(a, 'Alexander polynomial coefficient')
            if i < 0:
                error_str = f"Alexander polynomial indices are stored for " \
                            f"i >= 0 only, got {i}."
                logger.error(error_str)
                raise DomainError(error_str)
            if a != 0:
                coeffs[i] = a
        self._coeffs = coeffs

    @classmethod
    def one(cls):
        return cls({0: 1})

    @property
    def degree(self):
        return max(self._coeffs, default=0)

    def coefficient(self, i):
        return self._coeffs.get(abs(i), 0)

    def coefficients(self):
        """
        The list [a_0, ..., a_degree].
        """
        return [self.coefficient(i) for i in range(self.degree + 1)]

    def evaluate(self, x):
        """
        Value of the Laurent polynomial at a non-zero number x.
        """
        value = self.coefficient(0)
        for i, a in self._coeffs.items():
            if i > 0:
                value += a * (x ** i + x ** -i)
        return value

    def is_normalized(self):
        return self.evaluate(1) == 1

    def determinant(self):
        """
        |Delta(-1)|.
        """
        return abs(self.evaluate(-1))

    def to_dict(self):
        return {i: self.coefficient(i) for i in range(self.degree + 1)
                if self.coefficient(i) != 0}

    def __eq__(self, other):
        if not isinstance(other, AlexanderPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(sorted(self._coeffs.items())))

    def __repr__(self):
        return f"AlexanderPolynomial({self.coefficients()})"

    def __str__(self):
        terms = []
        for i in range(self.degree, 0, -1):
            a = self.coefficient(i)
            if a:
                terms.append(f"{a:+d}(T^{i}+T^-{i})")
        terms.append(f"{self.coefficient(0):+d}")
        return ' '.join(terms)


def torsion_coefficients(alex):
    """
    Torsion coefficients t_i = sum_{j >= 1} j a_{i+j}.

    Parameters
    ----------

    alex: AlexanderPolynomial
        The polynomial.

    Returns
    -------

    list:
        [t_0, ..., t_g] with g the degree; t_g is always 0 and every later
        coefficient vanishes too.
    """
    g = alex.degree
    return [sum(j * alex.coefficient(i + j) for j in range(1, g - i + 1))
            for i in range(g + 1)]


def alexander_from_torsion(torsion):
    """
    Inverse of torsion_coefficients: a_i = t_{i-1} - 2t_i + t_{i+1} for
    i >= 1, and a_0 fixed by Delta(1) = 1.

    Parameters
    ----------

    torsion: list of int
        t_0, t_1, ...; missing coefficients are zero.

    Returns
    -------

    AlexanderPolynomial:
        The normalized polynomial.
    """
    t = list(torsion) + [0, 0]
    coeffs = {i: t[i - 1] - 2 * t[i] + t[i + 1] for i in range(1, len(t) - 1)}
    coeffs[0] = 1 - 2 * sum(coeffs.values())
    return AlexanderPolynomial(coeffs)


class VHData(object):
    """
    The window V_{-(g-1)}, ..., V_{g-1} of the V-sequence. Outside the
    window V_k = 0 for k >= g and V_k = -k for k <= -g; H_k = V_{-k}.

    Parameters
    ----------

    genus: int
        Seifert genus g; 0 only for the unknot, whose window is empty.

    window: list of int
        The 2g - 1 values, lowest index first.
    """
    def __init__(self, genus, window):
        genus = _check_int(genus, 'genus')
        window = tuple(_check_int(v, 'V value') for v in window)
        expected = 2 * genus - 1 if genus > 0 else 0
        if genus < 0 or len(window) != expected:
            error_str = f"A genus {genus} V-window has {expected} entries, " \
                        f"got {len(window)}."
            logger.error(error_str)
            raise DomainError(error_str)
        self.genus = genus
        self.window = window

    @classmethod
    def from_tail(cls, tail, genus=None):
        """
        Builds the window from V_0, V_1, ... using V_{-k} = V_k + k.
        Trailing entries up to the genus are padded with zeros.
        """
        tail = list(tail)
        genus = len(tail) if genus is None else genus
        tail = (tail + [0] * genus)[:genus]
        negative = [tail[k] + k for k in range(genus - 1, 0, -1)]
        return cls(genus, negative + tail)

    @classmethod
    def trivial(cls, genus):
        """
        The window with V_k = 0 for every k >= 0.
        """
        return cls.from_tail([], genus)

    def v(self, k):
        if k >= self.genus:
            return 0
        if k <= -self.genus:
            return -k
        return self.window[k + self.genus - 1]

    def h(self, k):
        return self.v(-k)

    def tail(self):
        """
        [V_0, ..., V_{g-1}].
        """
        return [self.v(k) for k in range(self.genus)]

    def first_zero(self):
        """
        Smallest i >= 0 with V_i = 0.
        """
        k = 0
        while self.v(k) != 0:
            k += 1
        return k

    def violations(self):
        """
        List of Violation for the V-sequence properties: non-negativity,
        monotonicity (including across the window edges) and the
        conjugation identity V_{-k} = V_k + k.
        """
        found = []
        g = self.genus
        for k in range(-(g - 1), g):
            if self.v(k) < 0:
                found.append(Violation(NON_NEGATIVITY, f"V_{k} = {self.v(k)} < 0"))
        for k in range(-g, g):
            if self.v(k) < self.v(k + 1):
                found.append(Violation(
                    MONOTONICITY, f"V_{k} = {self.v(k)} < V_{k + 1} = {self.v(k + 1)}"))
        for k in range(1, g):
            if self.v(-k) != self.v(k) + k:
                found.append(Violation(
                    CONJUGATION, f"V_{-k} = {self.v(-k)} differs from "
                                 f"V_{k} + {k} = {self.v(k) + k}"))
        return found

    def __eq__(self, other):
        if not isinstance(other, VHData):
            return NotImplemented
        return self.genus == other.genus and self.window == other.window

    def __hash__(self):
        return hash((self.genus, self.window))

    def __repr__(self):
        return f"VHData(genus={self.genus}, window={list(self.window)})"


class ReducedGroupTable(object):
    """
    The reduced groups A^red_k as lists of (offset, length) cyclic
    summands; `offset` is measured from the grading of 1 in the tower of
    A^+_k.

    Parameters
    ----------

    entries: dict
        k -> iterable of (offset, length).
    """
    def __init__(self, entries=None):
        table = {}
        for k, summands in (entries or {}).items():
            k = _check_int(k, 'reduced group index')
            cleaned = []
            for offset, length in summands:
                offset = _check_int(offset, 'reduced summand offset')
                length = _check_int(length, 'reduced summand length')
                if length <= 0:
                    error_str = f"Reduced summand lengths are positive, got " \
                                f"{length} at k = {k}."
                    logger.error(error_str)
                    raise DomainError(error_str)
                cleaned.append((offset, length))
            if cleaned:
                table[k] = tuple(sorted(cleaned))
        self._table = table

    def summands(self, k):
        return self._table.get(k, ())

    def indices(self):
        return sorted(self._table)

    def dimension(self, k):
        return sum(length for _, length in self.summands(k))

    @property
    def total_dimension(self):
        return sum(self.dimension(k) for k in self._table)

    def euler(self, k):
        """
        chi(A^red_k) with the tower of A^+_k in even grading.
        """
        return sum(length if offset % 2 == 0 else -length
                   for offset, length in self.summands(k))

    def basis_offsets(self, k):
        return sorted(offset + 2 * j for offset, length in self.summands(k)
                      for j in range(length))

    def parities(self):
        return {parity(offset) for k in self._table
                for offset, _ in self._table[k]}

    def max_length(self):
        return max((length for k in self._table for _, length in self._table[k]),
                   default=0)

    def finites_at(self, k, base):
        """
        The summands of A^red_k as FiniteCyclic, placed above the grading
        `base` of the tower generator.
        """
        return [FiniteCyclic(base + offset, length)
                for offset, length in self.summands(k)]

    def violations(self, genus):
        found = []
        for k in self.indices():
            if abs(k) >= genus:
                found.append(Violation(REDUCED_SUPPORT,
                                       f"A^red_{k} is non-zero but |k| >= g = {genus}"))
            for offset, length in self.summands(k):
                if length > genus:
                    found.append(Violation(REDUCED_LENGTH,
                                           f"A^red_{k} has a summand of length "
                                           f"{length} > g = {genus}"))
            if self.basis_offsets(k) != self.basis_offsets(-k):
                found.append(Violation(REDUCED_SYMMETRY,
                                       f"A^red_{k} and A^red_{-k} differ as graded "
                                       f"vector spaces"))
        return found

    def to_dict(self):
        return {k: [list(s) for s in self._table[k]] for k in self.indices()}

    def __eq__(self, other):
        if not isinstance(other, ReducedGroupTable):
            return NotImplemented
        return self._table == other._table

    def __hash__(self):
        return hash(tuple(sorted(self._table.items())))

    def __repr__(self):
        return f"ReducedGroupTable({self.to_dict()})"


class KnotSurgeryModel(object):
    """
    Everything the surgery formula needs to know about a knot.

    Parameters
    ----------

    vh: VHData
        The V-sequence window.

    red: ReducedGroupTable
        The reduced groups; empty for L-space knots.

    alex: AlexanderPolynomial
        The Alexander polynomial. When None it is derived from
        t_k = V_k + chi(A^red_k).

    mirror_v: VHData
        V-sequence of the mirror knot, optional.

    hfk_top_parity: int
        Parity (0 or 1) of the grading supporting HFK-hat(K, g), optional.

    slice_genus: int
        Optional annotation, only reported.

    name: str
        Label used in reports; ignored by equality.
    """
    def __init__(self, vh, red=None, alex=None, mirror_v=None,
                 hfk_top_parity=None, slice_genus=None, name=None):
        self.vh = vh
        self.red = red if red is not None else ReducedGroupTable()
        if alex is None:
            torsion = [vh.v(k) + self.red.euler(k) for k in range(vh.genus + 1)]
            alex = alexander_from_torsion(torsion)
        self.alex = alex
        self.mirror_v = mirror_v
        if hfk_top_parity is not None and hfk_top_parity not in (0, 1):
            error_str = f"hfk_top_parity is 0 or 1, got {hfk_top_parity!r}."
            logger.error(error_str)
            raise DomainError(error_str)
        self.hfk_top_parity = hfk_top_parity
        self.slice_genus = slice_genus
        self.name = name or 'knot'

    @property
    def genus(self):
        return self.vh.genus

    @property
    def delta(self):
        return self.red.total_dimension

    @property
    def torsion(self):
        return torsion_coefficients(self.alex)

    def t(self, k):
        torsion = self.torsion
        return torsion[k] if 0 <= k < len(torsion) else 0

    def v(self, k):
        return self.vh.v(k)

    def h(self, k):
        return self.vh.h(k)

    def mirror_vh(self):
        """
        The mirror V-data, defaulting to V-bar = 0 on k >= 0 for models with
        no reduced part.
        """
        if self.mirror_v is not None:
            return self.mirror_v
        if self.delta == 0:
            return VHData.trivial(self.genus)
        error_str = f"Model {self.name} has reduced groups but no mirror V-data."
        logger.error(error_str)
        raise InsufficientDataError(error_str)

    def __eq__(self, other):
        if not isinstance(other, KnotSurgeryModel):
            return NotImplemented
        return (self.vh, self.red, self.alex, self.mirror_v, self.hfk_top_parity,
                self.slice_genus) == (other.vh, other.red, other.alex,
                                      other.mirror_v, other.hfk_top_parity,
                                      other.slice_genus)

    def __hash__(self):
        return hash((self.vh, self.red, self.alex))

    def __repr__(self):
        return f"KnotSurgeryModel(name={self.name!r}, genus={self.genus}, " \
               f"V={list(self.vh.window)}, delta={self.delta})"


def unknot_model():
    """
    The unknot: empty window, V = H = 0 on the non-negative side.
    """
    return KnotSurgeryModel(VHData(0, ()), ReducedGroupTable(),
                            AlexanderPolynomial.one(), mirror_v=VHData(0, ()),
                            hfk_top_parity=0, name='unknot')


def lspace_model(alex, name=None):
    """
    Model of an L-space knot with the given Alexander polynomial:
    V_k = t_k for k >= 0, no reduced groups and V-bar = 0.

    Parameters
    ----------

    alex: AlexanderPolynomial
        Normalized polynomial of the knot.

    name: str
        Label for reports.

    Returns
    -------

    KnotSurgeryModel:
        The model.
    """
    if not alex.is_normalized():
        error_str = f"{alex} is not normalized (Delta(1) = {alex.evaluate(1)})."
        logger.error(error_str)
        raise NotAnLSpaceKnotError(error_str)
    g = alex.degree
    if g == 0:
        model = unknot_model()
        model.name = name or model.name
        return model
    t = torsion_coefficients(alex)
    drops = [t[k] - t[k + 1] for k in range(g)]
    if any(drop not in (0, 1) for drop in drops) or t[g - 1] <= 0:
        error_str = f"Torsion coefficients {t} of {alex} are not non-increasing " \
                    f"with unit drops, so it is not an L-space knot polynomial."
        logger.error(error_str)
        raise NotAnLSpaceKnotError(error_str)
    return KnotSurgeryModel(VHData.from_tail(t[:g]), ReducedGroupTable(), alex,
                            mirror_v=VHData.trivial(g), hfk_top_parity=0,
                            name=name or f"L-space knot {alex}")


def validate(model):
    """
    Checks the structural properties of a model.

    Parameters
    ----------

    model: KnotSurgeryModel
        The model to check.

    Returns
    -------

    list:
        Violation(name, detail) entries, empty when the model is valid.
    """
    g = model.genus
    found = model.vh.violations()
    found += model.red.violations(g)
    if not model.alex.is_normalized():
        found.append(Violation(NORMALIZATION,
                               f"Delta(1) = {model.alex.evaluate(1)} != 1"))
    if model.alex.degree > g:
        found.append(Violation(ALEXANDER_DEGREE,
                               f"deg Delta = {model.alex.degree} > g = {g}"))
    for k in range(max(g, model.alex.degree) + 1):
        expected = model.v(k) + model.red.euler(k)
        if model.t(k) != expected:
            found.append(Violation(EULER, f"t_{k} = {model.t(k)} but V_{k} + "
                                          f"chi(A^red_{k}) = {expected}"))
    if model.hfk_top_parity is not None and g > 0:
        top = {parity(o) for o in model.red.basis_offsets(g - 1)}
        if len(top) == 1 and top != {model.hfk_top_parity}:
            found.append(Violation(HFK_PARITY,
                                   f"A^red_{g - 1} sits in parity {top.pop()} but "
                                   f"hfk_top_parity is {model.hfk_top_parity}"))
    if model.mirror_v is not None:
        if model.mirror_v.genus != g:
            found.append(Violation(MIRROR, f"mirror genus {model.mirror_v.genus} "
                                           f"!= {g}"))
        found += [Violation(MIRROR, f"{v.name}: {v.detail}")
                  for v in model.mirror_v.violations()]
    for v in found:
        logger.debug(f"{model.name}: {v.name}: {v.detail}")
    return found


def mirror_is_exact(model):
    """
    Whether mirror(model) is a complete model of m(K): mirror data is
    available and the carried-over reduced table satisfies
    t_k = V-bar_k + chi(A^red_k) for every k >= 0.

    The mirror of an L-space knot other than the unknot fails this, since
    its reduced groups are not part of the model; only its V-data is exact.
    """
    if model.mirror_v is None and model.delta != 0:
        return False
    mirror_v = model.mirror_vh()
    return all(model.t(k) == mirror_v.v(k) + model.red.euler(k)
               for k in range(max(model.genus, model.alex.degree) + 1))


def mirror(model):
    """
    Model of the mirror knot: the V-data and mirror V-data swap, the reduced
    table is carried over as it is.

    Parameters
    ----------

    model: KnotSurgeryModel
        A model with mirror data, or one without reduced groups.

    Returns
    -------

    KnotSurgeryModel:
        The mirror. Unless mirror_is_exact(model) holds, only its V-data
        describes m(K).
    """
    mirror_v = model.mirror_vh()
    name = model.name[2:-1] if model.name.startswith('m(') and model.name.endswith(')') \
        else f"m({model.name})"
    if not mirror_is_exact(model):
        logger.warning(f"The reduced groups of {name} are not known; its model "
                       f"carries exact V-data only.")
    return KnotSurgeryModel(mirror_v, model.red, model.alex, mirror_v=model.vh,
                            hfk_top_parity=model.hfk_top_parity,
                            slice_genus=model.slice_genus, name=name)
