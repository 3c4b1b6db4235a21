"""
Ready-made knot models and target manifolds, and a generator of random
valid models for the randomized checks.
"""

from fractions import Fraction

from hf_surgery.floer._errors import DomainError
from hf_surgery.floer.graded_module import GradedModule
from hf_surgery.floer.knot_model import AlexanderPolynomial, VHData, \
    ReducedGroupTable, KnotSurgeryModel, lspace_model, unknot_model
from hf_surgery.floer.surgery import SpincHF, ManifoldHF

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


# A^red_{+-(2n+1)}(K_n) is tau(1) in odd grading; offset 1 puts it one step
# above the tower generator, which makes slope -4 on K_0 give tau_0(1).
KN_REDUCED_OFFSET = 1


def trefoil_model():
    return lspace_model(AlexanderPolynomial([-1, 1]), name='trefoil')


def torus_two_model(p):
    """
    The (p, 2) torus knot, an L-space knot with
    Delta = sum_{j=0}^{p-1} (-1)^j T^{(p-1)/2 - j}.

    Parameters
    ----------

    p: int
        Odd and positive; p = 1 is the unknot.

    Returns
    -------

    KnotSurgeryModel:
        The model.
    """
    if not isinstance(p, int) or p < 1 or p % 2 == 0:
        error_str = f"T(p, 2) needs an odd positive p, got {p!r}."
        logger.error(error_str)
        raise DomainError(error_str)
    top = (p - 1) // 2
    alex = AlexanderPolynomial([(-1) ** (top - i) for i in range(top + 1)])
    if p == 1:
        return unknot_model()
    return lspace_model(alex, name=f"T({p},2)")


def kn_family_model(n):
    """
    The knot K_n: genus 2n + 2, V_k = 0 for k >= 0, and A^red nonzero only
    at k = +-(2n+1), where it is tau(1) in odd grading. Its torsion
    coefficients vanish except t_{2n+1} = -1.

    Parameters
    ----------

    n: int
        n >= 0.

    Returns
    -------

    KnotSurgeryModel:
        The model, with trivial mirror V-data and odd hfk_top_parity.
    """
    if not isinstance(n, int) or n < 0:
        error_str = f"K_n needs n >= 0, got {n!r}."
        logger.error(error_str)
        raise DomainError(error_str)
    genus = 2 * n + 2
    m = 2 * n + 1
    red = ReducedGroupTable({m: [(KN_REDUCED_OFFSET, 1)],
                             -m: [(KN_REDUCED_OFFSET, 1)]})
    if n == 0:
        alex = AlexanderPolynomial({0: -1, 1: 2, 2: -1})
    else:
        alex = AlexanderPolynomial({0: 1, 2 * n: -1, m: 2, genus: -1})
    return KnotSurgeryModel(VHData.trivial(genus), red, alex,
                            mirror_v=VHData.trivial(genus), hfk_top_parity=1,
                            name=f"K{n}")


def teragaito_manifold():
    """
    The manifold with |H_1| = 4 whose structures carry T_{-3/4},
    T_0 + tau_0(1), T_{1/4} and T_0 + tau_0(1).
    """
    d_values = [Fraction(-3, 4), Fraction(0), Fraction(1, 4), Fraction(0)]
    structures = []
    for i, d in enumerate(d_values):
        finites = [(0, 1)] if i % 2 == 1 else []
        structures.append(SpincHF(i, GradedModule([d], finites), d))
    return ManifoldHF(4, structures, name='teragaito')


def random_model(rng, max_genus=5, max_v=6, max_reduced=3, mirror_shift=None):
    """
    A random model satisfying every property validate() checks.

    V is a random non-increasing tail with unit drops ending in 0 at the
    genus; the negative side follows from V_{-k} = V_k + k. The reduced
    table gets up to `max_reduced` symmetric pairs of summands of length at
    most g. Optionally the mirror has V-bar_0 = 1, in which case A^red_0
    receives the summand tau(1) at offset 2V_0 that cancels against the
    cokernel of negative surgeries.

    Parameters
    ----------

    rng: numpy.random.Generator
        Source of randomness.

    max_genus: int
        Largest genus drawn.

    max_v: int
        Cap on V_0.

    max_reduced: int
        Largest number of reduced summand pairs.

    mirror_shift: bool
        Force (True) or forbid (False) the V-bar_0 = 1 variant; random when
        None.

    Returns
    -------

    KnotSurgeryModel:
        The model, Alexander polynomial derived from t_k = V_k + chi(A^red_k).
    """
    genus = int(rng.integers(0, max_genus + 1))
    if genus == 0:
        return unknot_model()
    tail = [0] * genus
    tail[genus - 1] = int(rng.integers(0, 2))
    for k in range(genus - 2, -1, -1):
        tail[k] = min(tail[k + 1] + int(rng.integers(0, 2)), max_v)
    vh = VHData.from_tail(tail)

    entries = {}
    for _ in range(int(rng.integers(0, max_reduced + 1))):
        k = int(rng.integers(0, genus))
        summand = (int(rng.integers(-3, 4)), int(rng.integers(1, genus + 1)))
        for index in {k, -k}:
            entries.setdefault(index, []).append(summand)

    if mirror_shift is None:
        mirror_shift = bool(rng.integers(0, 2))
    if mirror_shift:
        entries.setdefault(0, []).append((2 * vh.v(0), 1))
        mirror_v = VHData.from_tail([1], genus)
    else:
        mirror_v = VHData.trivial(genus)
    red = ReducedGroupTable(entries)
    model = KnotSurgeryModel(vh, red, mirror_v=mirror_v,
                             name=f"random(g={genus}, V={tail}, red={red.to_dict()})")
    logger.debug(f"Drew {model}.")
    return model
