from hf_surgery.floer._errors import HFSurgeryError, InvalidGradingError, \
    DomainError, WrongDispatchError, NotAnLSpaceKnotError, \
    InsufficientDataError, InconsistentModelError, SchemaError, \
    InvalidModelError
from hf_surgery.floer.graded_module import TowerSummand, FiniteCyclic, \
    GradedModule, direct_sum, u_annihilation_exponent, \
    z2_euler_characteristic, z2_dimensions
from hf_surgery.floer.knot_model import AlexanderPolynomial, VHData, \
    ReducedGroupTable, KnotSurgeryModel, Violation, torsion_coefficients, \
    alexander_from_torsion, unknot_model, lspace_model, validate, mirror, \
    mirror_is_exact
from hf_surgery.floer.lens_space import Slope, cone_index, lens_d
from hf_surgery.floer.surgery import SpincHF, ManifoldHF, ConeSlot, \
    cone_slots, positive_surgery, negative_surgery, zero_surgery, \
    full_surgery, reduced_rank_formula, d_invariant_profile, lspace_slope
from hf_surgery.floer.knot_catalog import trefoil_model, torus_two_model, \
    kn_family_model, teragaito_manifold, random_model
from hf_surgery.floer.documents import knot_to_document, knot_from_document, \
    manifold_to_document, manifold_from_document, render_table
