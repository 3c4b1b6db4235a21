"""
Checks the closed-form surgery engine against the homology of truncated
mapping cones.

For p < 0 the slots outside the window form an acyclic quotient once
k(W+1) <= -g and k(-W-1) >= g, so the window alone has the right
homology. For p > 0 the generators outside the window sit in gradings
that grow outwards, and the comparison stays below them. In both cases
only gradings in which every tower of the window is complete are kept,
which makes the truncation a subcomplex whose homology is exact one step
below its ceiling.
"""

from collections import Counter
from math import gcd

import numpy as np

from hf_surgery.floer._errors import DomainError
from hf_surgery.floer.floer_utils import format_rational, ordered_map
from hf_surgery.floer.graded_module import FiniteCyclic
from hf_surgery.floer.knot_catalog import random_model
from hf_surgery.floer.lens_space import Slope, lens_d
from hf_surgery.floer.surgery import cone_slots, mirror_exponent, \
    positive_surgery, negative_surgery
from hf_surgery.oracle.truncated_cone import AttachedSummand, build_cone, homology

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

DEFAULT_CHARACTERISTIC = 2
DEFAULT_SEED = 1729
MAX_WINDOW = 10000


class OracleReport(object):
    """
    Outcome of one oracle comparison.

    Parameters
    ----------

    model_name: str
        The knot.

    slope: Slope
        The slope.

    index: int
        The Spin^c label.

    window, height, characteristic, seed:
        Truncation and field parameters of the first run.

    compared_up_to: Fraction
        Gradings up to this value were compared; None if inconclusive.

    oracle_table, closed_table: Counter
        grading -> dimension from the cone and from the closed form.

    mismatches: list
        (grading, oracle dimension, closed-form dimension).

    stable: bool
        Whether the run at (W + 1, M + 2) agreed on the common range.

    inconclusive: str
        Why no comparison could be made, None otherwise.
    """
    def __init__(self, model_name, slope, index, window, height, characteristic,
                 seed, compared_up_to=None, oracle_table=None, closed_table=None,
                 mismatches=(), stable=False, inconclusive=None):
        self.model_name = model_name
        self.slope = slope
        self.index = index
        self.window = window
        self.height = height
        self.characteristic = characteristic
        self.seed = seed
        self.compared_up_to = compared_up_to
        self.oracle_table = oracle_table or Counter()
        self.closed_table = closed_table or Counter()
        self.mismatches = list(mismatches)
        self.stable = stable
        self.inconclusive = inconclusive

    @property
    def passed(self):
        return self.inconclusive is None and self.stable and not self.mismatches

    def to_dict(self):
        def table(t):
            return {format_rational(g): t[g] for g in sorted(t)}
        doc = {'knot': self.model_name, 'slope': str(self.slope), 'index': self.index,
               'window': self.window, 'height': self.height,
               'characteristic': self.characteristic, 'seed': self.seed,
               'passed': self.passed, 'stable': self.stable}
        if self.inconclusive is not None:
            doc['inconclusive'] = self.inconclusive
            return doc
        doc['compared_up_to'] = format_rational(self.compared_up_to)
        doc['oracle'] = table(self.oracle_table)
        doc['closed_form'] = table(self.closed_table)
        doc['mismatches'] = [[format_rational(g), o, c] for g, o, c in self.mismatches]
        return doc


def decoupled(model, slope, i, window):
    """
    Whether the slots just outside [-W, W] have |k| >= g on the side where
    the cone becomes trivial.
    """
    p, q = slope
    g = model.genus
    right, left = (i + p * (window + 1)) // q, (i - p * (window + 1)) // q
    if p > 0:
        return right >= g and left <= -g
    return right <= -g and left >= g


def _outside_floor(model, slope, i, window):
    # lowest generator outside the window; only meaningful for p > 0
    outer = list(range(-window - 3, -window)) + list(range(window + 1, window + 5))
    slots = {s.n: s for s in cone_slots(model, slope, i, outer)}
    a = [slots[n].a_grading for n in outer if abs(n) <= window + 3]
    b = [slots[n].b_grading for n in outer if n < -window or n > window + 1]
    return min(a + b)


def _tower_floor(model, slope, i, window):
    slots = cone_slots(model, slope, i, range(-window, window + 2))
    return min([s.a_grading for s in slots[:-1]] + [s.b_grading for s in slots])


def _ceiling(model, slope, i, window, height):
    ceiling = _tower_floor(model, slope, i, window) + 2 * (height - 1)
    if slope.p > 0:
        ceiling = min(ceiling, _outside_floor(model, slope, i, window) - 1)
    return ceiling


def _target(module):
    """
    The comparison has to reach this grading to see every summand and the
    bottom of the tower.
    """
    tops = [f.top for f in module.finites] + [t.d for t in module.towers]
    return max(tops) + 2


def choose_window(model, slope, i, target, margin=1):
    """
    Smallest decoupled window (for p > 0 also one whose outside generators
    lie above `target` + 2), widened by `margin`.
    """
    window = 0
    while not decoupled(model, slope, i, window) or \
            (slope.p > 0 and _outside_floor(model, slope, i, window) < target + 2):
        window += 1
        if window > MAX_WINDOW:
            error_str = f"No decoupled window found for {slope}, structure {i}."
            logger.error(error_str)
            raise DomainError(error_str)
    return window + margin


def choose_height(model, slope, i, window, target, margin=2):
    """
    Smallest tower height making every tower of the window complete up to
    `target` + 1, plus `margin`.
    """
    floor = _tower_floor(model, slope, i, window)
    needed = target + 1 - floor
    return max(1, -(-needed.numerator // (2 * needed.denominator)) + 1) + margin


def attachments(model, slope, i, slots, characteristic, rng):
    """
    Attaching maps for the reduced summands of every slot.

    For p > 0 the coefficients are drawn at random. For p < 0 the cokernel
    of the tower maps is a single tower whose bottom sits at d(L(p,q),i), so
    summands with top below d(L(p,q),i) + 1 get random maps and the others
    zero maps, except for one summand tau_{d(L(p,q),i)+1}(N) in slot 0 or 1,
    picked at random, which is sent onto the bottom of the B tower of slot 1
    with a random non-zero coefficient when N > 0.

    Returns
    -------

    list of AttachedSummand:
        The attachments, or None if N > 0 and no summand can cancel.
    """
    p, q = slope
    d_lens = lens_d(p, q, i)
    attached = []
    for s in slots:
        for f in model.red.finites_at(s.k, s.a_grading):
            if p > 0 or f.top < d_lens + 1:
                coeffs = rng.integers(0, characteristic, size=2)
                attached.append(AttachedSummand(s.n, f, int(coeffs[0]), int(coeffs[1])))
            else:
                attached.append(AttachedSummand(s.n, f, 0, 0))
    if p < 0:
        n_exp = mirror_exponent(model, p, q, i)
        if n_exp > 0:
            wanted = FiniteCyclic(d_lens + 1, n_exp)
            candidates = [idx for idx, att in enumerate(attached)
                          if att.summand == wanted and att.slot in (0, 1)]
            if not candidates:
                return None
            idx = candidates[int(rng.integers(0, len(candidates)))]
            coeff = int(rng.integers(1, characteristic))
            att = attached[idx]
            attached[idx] = att._replace(v_coeff=coeff if att.slot == 1 else 0,
                                         h_coeff=coeff if att.slot == 0 else 0)
    return attached


def oracle_homology(model, slope, i, window, height, characteristic=DEFAULT_CHARACTERISTIC,
                    seed=DEFAULT_SEED):
    """
    Homology of the truncated cone of structure i.

    Returns
    -------

    Counter, Fraction:
        grading -> dimension for every grading up to the exactness bound,
        and that bound; (None, None) if the attaching maps cannot be chosen.
    """
    rng = np.random.default_rng(seed)
    slots = cone_slots(model, slope, i, range(-window, window + 1))
    attached = attachments(model, slope, i, slots, characteristic, rng)
    if attached is None:
        return None, None
    ceiling = _ceiling(model, slope, i, window, height)
    cone = build_cone(slots, height, characteristic, attached, ceiling)
    bound = ceiling - 1
    table = Counter({g: n for g, n in homology(cone).items() if g <= bound})
    return table, bound


def _restrict(table, bound):
    return Counter({g: n for g, n in table.items() if g <= bound})


def compare(model, slope, i, window=None, height=None,
            characteristic=DEFAULT_CHARACTERISTIC, seed=DEFAULT_SEED,
            window_margin=1, height_margin=2):
    """
    Compares the closed form for structure i with the oracle, grading by
    grading, and reruns at (W + 1, M + 2) to check stability.

    Parameters
    ----------

    model: KnotSurgeryModel
        The knot data.

    slope: Slope
        A non-zero slope.

    i: int
        The Spin^c label.

    window, height: int
        Truncation; chosen automatically when None.

    characteristic: int
        The prime field.

    seed: int
        Seed of the random attaching maps.

    window_margin, height_margin: int
        Slack added to automatically chosen truncations.

    Returns
    -------

    OracleReport:
        The comparison.
    """
    if slope.p == 0:
        error_str = 'The oracle compares rational homology sphere surgeries only.'
        logger.error(error_str)
        raise DomainError(error_str)
    slope.check_index(i)
    p, q = slope
    closed = (positive_surgery if p > 0 else negative_surgery)(model, p, q, i)
    target = _target(closed.module)
    if window is None:
        window = choose_window(model, slope, i, target, window_margin)
    if height is None:
        height = choose_height(model, slope, i, window, target, height_margin)
    params = dict(model_name=model.name, slope=slope, index=i, window=window,
                  height=height, characteristic=characteristic, seed=seed)
    logger.debug(f"Oracle on {model.name} at {slope}, structure {i}: W = {window}, "
                 f"M = {height}, char {characteristic}, seed {seed}.")
    if not decoupled(model, slope, i, window):
        return OracleReport(inconclusive='decoupling condition unmet', **params)

    first, bound = oracle_homology(model, slope, i, window, height, characteristic, seed)
    if first is None:
        return OracleReport(inconclusive='no reduced summand cancels the cokernel',
                            **params)
    second, second_bound = oracle_homology(model, slope, i, window + 1, height + 2,
                                           characteristic, seed)
    common = min(bound, second_bound)
    stable = _restrict(first, common) == _restrict(second, common)

    closed_table = _restrict(closed.module.grading_table(ceiling=bound), bound)
    mismatches = [(g, first[g], closed_table[g])
                  for g in sorted(set(first) | set(closed_table))
                  if first[g] != closed_table[g]]
    if mismatches:
        logger.warning(f"Oracle mismatch on {model.name} at {slope}, structure {i}: "
                       f"{[(format_rational(g), o, c) for g, o, c in mismatches]}")
    return OracleReport(compared_up_to=bound, oracle_table=first,
                        closed_table=closed_table, mismatches=mismatches,
                        stable=stable, **params)


def compare_all(model, slope, characteristic=DEFAULT_CHARACTERISTIC, seed=DEFAULT_SEED,
                window=None, height=None, pool_size=None):
    """
    compare() for every structure of the slope, in label order.
    """
    return ordered_map(lambda i: compare(model, slope, i, window, height,
                                         characteristic, seed),
                       slope.spinc_range(), pool_size)


class TrialSummary(object):
    """
    Aggregate of randomized oracle trials.
    """
    def __init__(self, trials, seed, characteristic, reports):
        self.trials = trials
        self.seed = seed
        self.characteristic = characteristic
        self.reports = reports

    @property
    def comparisons(self):
        return len(self.reports)

    @property
    def failures(self):
        return [r for r in self.reports if r.inconclusive is None and not r.passed]

    @property
    def inconclusive(self):
        return [r for r in self.reports if r.inconclusive is not None]

    @property
    def passed(self):
        return not self.failures and not self.inconclusive

    def to_dict(self):
        return {'trials': self.trials, 'seed': self.seed,
                'characteristic': self.characteristic,
                'comparisons': self.comparisons, 'passed': self.passed,
                'failures': [r.to_dict() for r in self.failures],
                'inconclusive': [r.to_dict() for r in self.inconclusive]}


def random_slope(rng, max_p=7, max_q=4):
    """
    A random non-zero slope with |p| <= max_p and q <= max_q.
    """
    while True:
        p = int(rng.integers(1, max_p + 1)) * (1 if rng.integers(0, 2) else -1)
        q = int(rng.integers(1, max_q + 1))
        if gcd(p, q) == 1:
            return Slope(p, q)


def oracle_trials(count, seed=DEFAULT_SEED, characteristic=DEFAULT_CHARACTERISTIC,
                  pool_size=None, max_genus=5, max_v=6, max_reduced=3, max_p=7,
                  max_q=4):
    """
    Runs `count` randomized comparisons: a random valid model, a random
    slope and every structure of it.

    Parameters
    ----------

    count: int
        Number of (model, slope) trials.

    seed: int
        Seed for the models, slopes and attaching maps.

    characteristic: int
        The prime field.

    pool_size: int
        gevent pool size for the trials.

    max_genus, max_v, max_reduced, max_p, max_q: int
        Bounds for the random models and slopes.

    Returns
    -------

    TrialSummary:
        Every report, with failures and inconclusive runs singled out.
    """
    logger.info(f"Running {count} oracle trials with seed {seed} "
                f"over F_{characteristic}.")
    rng = np.random.default_rng(seed)
    jobs = []
    for _ in range(count):
        model = random_model(rng, max_genus, max_v, max_reduced)
        jobs.append((model, random_slope(rng, max_p, max_q), int(rng.integers(0, 2 ** 31))))

    def run_trial(job):
        model, slope, trial_seed = job
        return [compare(model, slope, i, characteristic=characteristic, seed=trial_seed)
                for i in slope.spinc_range()]

    reports = [r for batch in ordered_map(run_trial, jobs, pool_size) for r in batch]
    summary = TrialSummary(count, seed, characteristic, reports)
    logger.info(f"{summary.comparisons} comparisons, {len(summary.failures)} failures, "
                f"{len(summary.inconclusive)} inconclusive.")
    return summary
