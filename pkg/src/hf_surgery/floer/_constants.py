"""
Constants shared by the hf_surgery modules: document keys, violation
names and report statuses.
"""

SCHEMA_VERSION = 1

SCHEMA_KEY = 'schema'
KIND_KEY = 'kind'
NAME_KEY = 'name'
KIND_KNOT = 'knot'
KIND_MANIFOLD = 'manifold'

# knot documents
GENUS_KEY = 'genus'
V_WINDOW_KEY = 'V_window'
REDUCED_KEY = 'reduced'
ALEXANDER_KEY = 'alexander'
MIRROR_V_WINDOW_KEY = 'mirror_V_window'
HFK_TOP_PARITY_KEY = 'hfk_top_parity'
SLICE_GENUS_KEY = 'slice_genus'

# manifold documents
H1_ORDER_KEY = 'h1_order'
SLOPE_KEY = 'slope'
STRUCTURES_KEY = 'structures'
INDEX_KEY = 'index'
D_KEY = 'd'
SUMMANDS_KEY = 'summands'
Z2_KEY = 'z2'
TOTAL_REDUCED_DIM_KEY = 'total_reduced_dim'

# graded module summands
SUMMAND_KIND_KEY = 'kind'
TOWER = 'tower'
FINITE = 'finite'
LENGTH_KEY = 'length'

# validation violations
MONOTONICITY = 'monotonicity'
NON_NEGATIVITY = 'non-negativity'
CONJUGATION = 'conjugation'
REDUCED_LENGTH = 'reduced-length'
REDUCED_SYMMETRY = 'reduced-symmetry'
REDUCED_SUPPORT = 'reduced-support'
EULER = 'euler'
NORMALIZATION = 'normalization'
ALEXANDER_DEGREE = 'alexander-degree'
HFK_PARITY = 'hfk-parity'
MIRROR = 'mirror'

# obstruction report statuses
PASS = 'pass'
FAIL = 'fail'
INAPPLICABLE = 'inapplicable'
