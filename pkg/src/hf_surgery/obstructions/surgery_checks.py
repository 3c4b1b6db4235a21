"""
Necessary conditions relating a knot model, a slope and a target
manifold, and recovery of the Alexander polynomial of an L-space knot
from one of its surgeries.

Each check is reported rather than raised: a CheckResult carries a
status (pass, fail or inapplicable), the inequality it evaluated and the
values that decided it.
"""

from collections import Counter, namedtuple
from fractions import Fraction

from hf_surgery.floer._constants import PASS, FAIL, INAPPLICABLE
from hf_surgery.floer._errors import DomainError, NotAnLSpaceKnotError
from hf_surgery.floer.floer_utils import format_rational
from hf_surgery.floer.knot_model import alexander_from_torsion
from hf_surgery.floer.lens_space import lens_d
from hf_surgery.floer.surgery import full_surgery
from hf_surgery.obstructions.manifold_invariants import c_invariant

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

CheckResult = namedtuple('CheckResult', ['name', 'status', 'statement', 'witness'])


def _status(ok):
    return PASS if ok else FAIL


def _plain(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


class ObstructionReport(object):
    """
    An ordered collection of CheckResult.
    """
    def __init__(self, subject, checks=()):
        self.subject = subject
        self.checks = list(checks)

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, other):
        self.checks += other.checks

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def failed(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def passed(self):
        return not self.failed

    def to_dict(self):
        return {'subject': self.subject, 'passed': self.passed,
                'checks': [{'name': c.name, 'status': c.status,
                            'statement': c.statement,
                            'witness': {k: _plain(v) for k, v in c.witness.items()}}
                           for c in self.checks]}


def _torsion_through(model):
    return [model.t(i) for i in range(max(model.genus, model.alex.degree) + 1)]


def torsion_sum_check(model, y):
    """
    sum_{i >= 0} |t_i(K)| <= c(Y), necessary for Y to be a positive-slope
    surgery on K.
    """
    t = _torsion_through(model)
    total = sum(abs(x) for x in t)
    c = c_invariant(y)
    witness = {'torsion_sum': total, 'c': c}
    if total > c:
        witness['torsion'] = t
    return CheckResult('torsion-sum', _status(total <= c),
                       'sum |t_i(K)| <= c(Y)', witness)


def genus_bound_check(model, slope, y=None):
    """
    U^(g + V_0) annihilates HF_red of the surgery.
    """
    y = y if y is not None else full_surgery(model, slope)
    u_exp = y.u_exponent()
    bound = model.genus + model.v(0)
    return CheckResult('genus-bound', _status(u_exp <= bound),
                       'U^(g(K) + V_0) HF_red(Y) = 0',
                       {'u_exponent': u_exp, 'genus': model.genus, 'V_0': model.v(0)})


def _twice_below(n, x):
    """
    Whether 2x <= n - sqrt(n), decided with integers only.
    """
    return n - 2 * x >= 0 and (n - 2 * x) ** 2 >= n


def seifert_threshold(n):
    """
    floor((n - sqrt(n)) / 2) for a positive integer n.
    """
    x = 0
    while _twice_below(n, x + 1):
        x += 1
    return x


def _ceil(value):
    value = Fraction(value)
    return -(-value.numerator // value.denominator)


def seifert_negative_checks(model, slope, y=None):
    """
    Necessary conditions for S^3_{p/q}(K), p/q > 0, to be a negatively
    oriented Seifert fibred space.

    Parameters
    ----------

    model: KnotSurgeryModel
        The knot data.

    slope: Slope
        A positive slope.

    y: ManifoldHF
        The surgery; computed when None.

    Returns
    -------

    ObstructionReport:
        One entry per condition.
    """
    p, q = slope
    if p <= 0:
        error_str = f"The Seifert fibred conditions are stated for p/q > 0, got {slope}."
        logger.error(error_str)
        raise DomainError(error_str)
    y = y if y is not None else full_surgery(model, slope)
    report = ObstructionReport(f"{model.name} at {slope}")
    g = model.genus
    n = _ceil(Fraction(p, q))
    g_tilde = model.vh.first_zero()
    threshold = seifert_threshold(n)
    t = _torsion_through(model)

    report.add(CheckResult('first-zero-bound', _status(_twice_below(n, g_tilde)),
                           '2 g~ <= n - sqrt(n), n = ceil(p/q)',
                           {'g_tilde': g_tilde, 'n': n}))

    u_exp = y.u_exponent()
    report.add(CheckResult('u-genus', _status(u_exp <= g), 'U^g(K) HF_red(Y) = 0',
                           {'u_exponent': u_exp, 'genus': g}))

    small_slope = Fraction(p, q) <= 3
    if small_slope:
        positive = [(i, t[i]) for i in range(len(t)) if t[i] > 0]
        report.add(CheckResult('torsion-nonpositive', _status(not positive),
                               't_i(K) <= 0 for all i >= 0 when p/q <= 3',
                               {'first_positive': positive[0]} if positive else {}))
    else:
        report.add(CheckResult('torsion-nonpositive', INAPPLICABLE,
                               't_i(K) <= 0 for all i >= 0 when p/q <= 3',
                               {'slope': str(slope)}))

    positive = [(i, t[i]) for i in range(threshold, len(t)) if t[i] > 0]
    report.add(CheckResult('torsion-threshold', _status(not positive),
                           't_i(K) <= 0 for i >= floor((n - sqrt(n)) / 2)',
                           dict({'threshold': threshold},
                                **({'first_positive': positive[0]} if positive else {}))))

    u_half = y.h1_order // 2
    degree_forced = small_slope or g > threshold or u_exp > u_half
    if degree_forced:
        report.add(CheckResult('degree-genus', _status(model.alex.degree == g),
                               'deg Delta_K = g(K) when p/q <= 3, g(K) > floor((n - sqrt(n)) / 2) '
                               'or U^floor(|H_1|/2) HF_red(Y) != 0',
                               {'degree': model.alex.degree, 'genus': g,
                                'threshold': threshold, 'u_exponent': u_exp}))
    else:
        report.add(CheckResult('degree-genus', INAPPLICABLE,
                               'deg Delta_K = g(K) when p/q <= 3, g(K) > floor((n - sqrt(n)) / 2) '
                               'or U^floor(|H_1|/2) HF_red(Y) != 0',
                               {'genus': g, 'threshold': threshold}))

    even = sorted({o for k in model.red.indices() for o, _ in model.red.summands(k)
                   if o % 2 == 0})
    report.add(CheckResult('reduced-odd', _status(not even),
                           'A^red_k(K) is supported in odd grading',
                           {'even_offsets': even} if even else {}))

    if not degree_forced or g == 0 or model.hfk_top_parity is None:
        report.add(CheckResult('hfk-odd', INAPPLICABLE,
                               'HFK-hat(K, g) is supported in odd degrees',
                               {'hfk_top_parity': model.hfk_top_parity}))
    else:
        report.add(CheckResult('hfk-odd', _status(model.hfk_top_parity == 1),
                               'HFK-hat(K, g) is supported in odd degrees',
                               {'hfk_top_parity': model.hfk_top_parity}))
    return report


def seifert_positive_checks(model):
    """
    Necessary conditions for a positive surgery on K to be a positively
    oriented Seifert fibred space: t_i >= 0, HFK-hat(K, g) in even degree
    and deg Delta = g.
    """
    report = ObstructionReport(model.name)
    t = _torsion_through(model)
    negative = [(i, t[i]) for i in range(len(t)) if t[i] < 0]
    report.add(CheckResult('torsion-nonnegative', _status(not negative),
                           't_i(K) >= 0 for all i',
                           {'first_negative': negative[0]} if negative else {}))
    if model.hfk_top_parity is None or model.genus == 0:
        report.add(CheckResult('hfk-even', INAPPLICABLE,
                               'HFK-hat(K, g) is supported in even degrees', {}))
    else:
        report.add(CheckResult('hfk-even', _status(model.hfk_top_parity == 0),
                               'HFK-hat(K, g) is supported in even degrees',
                               {'hfk_top_parity': model.hfk_top_parity}))
    report.add(CheckResult('degree-genus', _status(model.alex.degree == model.genus),
                           'deg Delta_K = g(K)',
                           {'degree': model.alex.degree, 'genus': model.genus}))
    return report


def property_s(subject):
    """
    Property S: for a ManifoldHF, HF_red lies in a single absolute Z/2
    grading; for a KnotSurgeryModel, every reduced summand offset has the
    same parity.
    """
    if hasattr(subject, 'structures'):
        dims = subject.z2_dimensions()
        return dims[0] == 0 or dims[1] == 0
    return len(subject.red.parities()) <= 1


def cosmetic_exclusion(model):
    """
    Whether K is excluded from having purely cosmetic surgeries: it is if it
    is non-trivial and has Property S, or if V_0 or V-bar_0 is non-zero.
    """
    nontrivial = model.genus > 0
    has_s = property_s(model)
    v0 = model.v(0)
    mirror_v0 = model.mirror_v.v(0) if model.mirror_v is not None else None
    reasons = []
    if nontrivial and has_s:
        reasons.append('property-s')
    if v0 != 0:
        reasons.append('V_0')
    if mirror_v0:
        reasons.append('mirror-V_0')
    return CheckResult('cosmetic', _status(nontrivial and bool(reasons)),
                       'no purely cosmetic surgeries',
                       {'nontrivial': nontrivial, 'property_s': has_s, 'V_0': v0,
                        'mirror_V_0': mirror_v0, 'reasons': reasons})


def surgery_matches(model, slope, y):
    """
    Compares full_surgery(model, slope) with Y as multisets of modules,
    ignoring the labels of the structures.

    Returns
    -------

    bool, dict:
        Whether they agree, and the modules found only on either side.
    """
    computed = full_surgery(model, slope)
    ours = Counter(s.module for s in computed.structures if s.module is not None)
    theirs = Counter(s.module for s in y.structures if s.module is not None)
    diff = {'only_computed': [str(m) for m in (ours - theirs).elements()],
            'only_target': [str(m) for m in (theirs - ours).elements()]}
    same = computed.h1_order == y.h1_order and ours == theirs
    return same, diff


def _chunks(lengths, size, what):
    values = []
    while lengths:
        chunk, lengths = lengths[:size], lengths[size:]
        if len(chunk) != size or len(set(chunk)) != 1:
            error_str = f"Reduced lengths {chunk} cannot be {size} copies of {what}."
            logger.error(error_str)
            raise NotAnLSpaceKnotError(error_str)
        values.append(chunk[0])
    return values


def recover_alexander_lspace(y, slope):
    """
    Recovers the Alexander polynomial of an L-space knot K from
    Y = S^3_{p/q}(K), p/q <= 1.

    Each V_k with k >= 1 shows up as 2q summands tau(V_k); V_0 shows up q
    times for p < 0 and q - p times for p > 0, where it is also read off
    from d(Y, 0) = d(L(p, q), 0) - 2V_0.

    Parameters
    ----------

    y: ManifoldHF
        The surgery.

    slope: Slope
        Its slope, p != 0 and p/q <= 1.

    Returns
    -------

    AlexanderPolynomial:
        The polynomial with t_k = V_k.
    """
    p, q = slope
    if p == 0 or Fraction(p, q) > 1:
        error_str = f"Recovery works for non-zero slopes up to 1, got {slope}."
        logger.error(error_str)
        raise DomainError(error_str)
    lengths = sorted((f.length for s in y.structures if s.module is not None
                      for f in s.module.finites), reverse=True)
    if p > 0:
        v0 = (lens_d(p, q, 0) - y.structure(0).d) / 2
        if v0.denominator != 1 or v0 < 0:
            error_str = f"d(Y, 0) = {format_rational(y.structure(0).d)} does not come " \
                        f"from an integer V_0."
            logger.error(error_str)
            raise NotAnLSpaceKnotError(error_str)
        v0 = int(v0)
        repeats = q - p
    else:
        v0 = lengths[0] if lengths else 0
        repeats = q
    if v0 > 0:
        head, lengths = lengths[:repeats], lengths[repeats:]
        if head != [v0] * repeats:
            error_str = f"Expected {repeats} summands of length V_0 = {v0}, found {head}."
            logger.error(error_str)
            raise NotAnLSpaceKnotError(error_str)
    tail = [v0] + _chunks(lengths, 2 * q, 'V_k')
    if v0 == 0 and len(tail) > 1:
        error_str = f"V_0 = 0 leaves no room for the lengths {lengths}."
        logger.error(error_str)
        raise NotAnLSpaceKnotError(error_str)
    drops = [tail[k] - tail[k + 1] for k in range(len(tail) - 1)] + [tail[-1]]
    if any(drop not in (0, 1) for drop in drops):
        error_str = f"V = {tail} is not non-increasing with unit drops."
        logger.error(error_str)
        raise NotAnLSpaceKnotError(error_str)
    alex = alexander_from_torsion(tail if tail != [0] else [])
    logger.info(f"Recovered Delta = {alex} from {y.name}.")
    return alex


def run_obstructions(model, y, slope=None):
    """
    Runs every check that applies to (model, Y) and, when a positive slope
    is given, the Seifert fibred conditions for it.
    """
    report = ObstructionReport(f"{model.name} -> {y.name}")
    report.add(torsion_sum_check(model, y))
    if slope is not None:
        report.add(genus_bound_check(model, slope))
        if slope.p > 0:
            report.extend(seifert_negative_checks(model, slope))
    report.extend(seifert_positive_checks(model))
    report.add(CheckResult('property-s', PASS if property_s(model) else INAPPLICABLE,
                           'A^red_k(K) in a single Z/2 grading',
                           {'parities': sorted(model.red.parities())}))
    report.add(cosmetic_exclusion(model))
    return report
