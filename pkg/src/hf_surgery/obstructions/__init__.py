from hf_surgery.obstructions.manifold_invariants import slope_denominator_bound, \
    m_invariant, c_invariant, alternating_genus_bound, candidate_slopes
from hf_surgery.obstructions.alexander_search import Candidate, EnumerationResult, \
    enumerate_from_bound, enumerate_alternating_alexander
from hf_surgery.obstructions.surgery_checks import CheckResult, ObstructionReport, \
    torsion_sum_check, genus_bound_check, seifert_negative_checks, \
    seifert_positive_checks, property_s, cosmetic_exclusion, surgery_matches, \
    recover_alexander_lspace, run_obstructions
