from hf_surgery.oracle.mod_p import row_echelon_mod_p, rank_mod_p, nullity_mod_p
from hf_surgery.oracle.truncated_cone import TruncatedCone, BasisElement, \
    AttachedSummand, abstract_slots, build_cone, homology
from hf_surgery.oracle.cone_oracle import OracleReport, TrialSummary, compare, \
    compare_all, oracle_homology, oracle_trials
