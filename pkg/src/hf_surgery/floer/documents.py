"""
Conversion between the in-memory objects and the `schema: 1` documents
(plain dictionaries ready for YAML), plus the plain-text table renderer.
"""

from hf_surgery.floer._constants import SCHEMA_KEY, SCHEMA_VERSION, KIND_KEY, \
    NAME_KEY, KIND_KNOT, KIND_MANIFOLD, GENUS_KEY, V_WINDOW_KEY, REDUCED_KEY, \
    ALEXANDER_KEY, MIRROR_V_WINDOW_KEY, HFK_TOP_PARITY_KEY, SLICE_GENUS_KEY, \
    H1_ORDER_KEY, SLOPE_KEY, STRUCTURES_KEY, INDEX_KEY, D_KEY, SUMMANDS_KEY, \
    Z2_KEY, TOTAL_REDUCED_DIM_KEY
from hf_surgery.floer._errors import SchemaError, HFSurgeryError
from hf_surgery.floer.floer_utils import as_rational, format_rational
from hf_surgery.floer.graded_module import GradedModule
from hf_surgery.floer.knot_model import AlexanderPolynomial, VHData, \
    ReducedGroupTable, KnotSurgeryModel
from hf_surgery.floer.lens_space import Slope
from hf_surgery.floer.surgery import SpincHF, ManifoldHF

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)


def _header(kind, name):
    return {SCHEMA_KEY: SCHEMA_VERSION, KIND_KEY: kind, NAME_KEY: name}


def _require(doc, key, where=''):
    if key not in doc:
        raise SchemaError(f"{where}{key}", 'missing required field')
    return doc[key]


def _check_kind(doc, kind):
    if doc.get(KIND_KEY) != kind:
        raise SchemaError(KIND_KEY, f"expected {kind!r}, found {doc.get(KIND_KEY)!r}")


def _int_list(value, field):
    if not isinstance(value, list) or \
            any(not isinstance(v, int) or isinstance(v, bool) for v in value):
        raise SchemaError(field, 'expected a list of integers')
    return value


def _alexander(value):
    if isinstance(value, dict):
        if any(not isinstance(v, int) or isinstance(v, bool)
               for v in list(value) + list(value.values())):
            raise SchemaError(ALEXANDER_KEY, 'expected a mapping i -> a_i of integers')
        return AlexanderPolynomial(value)
    return AlexanderPolynomial(_int_list(value, ALEXANDER_KEY))


def knot_to_document(model):
    """
    Serializes a KnotSurgeryModel.
    """
    doc = _header(KIND_KNOT, model.name)
    doc[GENUS_KEY] = model.genus
    doc[V_WINDOW_KEY] = list(model.vh.window)
    doc[REDUCED_KEY] = model.red.to_dict()
    doc[ALEXANDER_KEY] = model.alex.coefficients()
    if model.mirror_v is not None:
        doc[MIRROR_V_WINDOW_KEY] = list(model.mirror_v.window)
    if model.hfk_top_parity is not None:
        doc[HFK_TOP_PARITY_KEY] = model.hfk_top_parity
    if model.slice_genus is not None:
        doc[SLICE_GENUS_KEY] = model.slice_genus
    return doc


def knot_from_document(doc):
    """
    Builds a KnotSurgeryModel from a parsed knot document.

    Parameters
    ----------

    doc: dict
        The document, header included.

    Returns
    -------

    KnotSurgeryModel:
        The model; it is not validated here.
    """
    _check_kind(doc, KIND_KNOT)
    genus = _require(doc, GENUS_KEY)
    if not isinstance(genus, int) or genus < 0:
        raise SchemaError(GENUS_KEY, 'expected a non-negative integer')
    reduced = doc.get(REDUCED_KEY) or {}
    if not isinstance(reduced, dict):
        raise SchemaError(REDUCED_KEY, 'expected a mapping k -> [[offset, length], ...]')
    for k, summands in reduced.items():
        where = f"{REDUCED_KEY}.{k}"
        if not isinstance(summands, list) or \
                any(not isinstance(s, list) or len(s) != 2 for s in summands):
            raise SchemaError(where, 'expected a list of [offset, length] pairs')
        for s in summands:
            _int_list(s, where)
    try:
        vh = VHData(genus, _int_list(_require(doc, V_WINDOW_KEY), V_WINDOW_KEY))
        red = ReducedGroupTable(reduced)
        alex = doc.get(ALEXANDER_KEY)
        if alex is not None:
            alex = _alexander(alex)
        mirror_v = doc.get(MIRROR_V_WINDOW_KEY)
        if mirror_v is not None:
            mirror_v = VHData(genus, _int_list(mirror_v, MIRROR_V_WINDOW_KEY))
        return KnotSurgeryModel(vh, red, alex, mirror_v=mirror_v,
                                hfk_top_parity=doc.get(HFK_TOP_PARITY_KEY),
                                slice_genus=doc.get(SLICE_GENUS_KEY),
                                name=doc.get(NAME_KEY))
    except SchemaError:
        raise
    except HFSurgeryError as e:
        raise SchemaError('<knot>', str(e))


def spinc_to_document(s):
    entry = {INDEX_KEY: s.index}
    if s.d is not None:
        entry[D_KEY] = format_rational(s.d)
    if s.module is not None:
        entry[SUMMANDS_KEY] = s.module.to_list()
    if s.z2 is not None:
        entry[Z2_KEY] = {0: s.z2[0], 1: s.z2[1]}
    return entry


def manifold_to_document(y):
    """
    Serializes a ManifoldHF, structures in label order.
    """
    doc = _header(KIND_MANIFOLD, y.name)
    doc[H1_ORDER_KEY] = y.h1_order
    if y.slope is not None:
        doc[SLOPE_KEY] = str(y.slope)
    doc[TOTAL_REDUCED_DIM_KEY] = y.total_reduced_dim
    doc[STRUCTURES_KEY] = [spinc_to_document(s) for s in y.structures]
    return doc


def manifold_from_document(doc):
    """
    Builds a ManifoldHF from a parsed manifold document. A stated
    total_reduced_dim must agree with the structures.
    """
    _check_kind(doc, KIND_MANIFOLD)
    h1_order = _require(doc, H1_ORDER_KEY)
    if not isinstance(h1_order, int) or h1_order < 0:
        raise SchemaError(H1_ORDER_KEY, 'expected a non-negative integer')
    slope = doc.get(SLOPE_KEY)
    if slope is not None:
        try:
            slope = Slope.parse(slope)
        except HFSurgeryError as e:
            raise SchemaError(SLOPE_KEY, str(e))
    entries = _require(doc, STRUCTURES_KEY)
    if not isinstance(entries, list):
        raise SchemaError(STRUCTURES_KEY, 'expected a list')
    structures = []
    for n, entry in enumerate(entries):
        where = f"{STRUCTURES_KEY}[{n}]"
        if not isinstance(entry, dict):
            raise SchemaError(where, 'expected a mapping')
        index = _require(entry, INDEX_KEY, f"{where}.")
        module = None
        if SUMMANDS_KEY in entry:
            module = GradedModule.from_list(entry[SUMMANDS_KEY], f"{where}.{SUMMANDS_KEY}")
        d = entry.get(D_KEY)
        try:
            d = as_rational(d) if d is not None else None
        except HFSurgeryError as e:
            raise SchemaError(f"{where}.{D_KEY}", str(e))
        if d is None and module is not None and module.d is not None:
            d = module.d
        z2 = entry.get(Z2_KEY)
        if z2 is not None:
            if not isinstance(z2, dict) or set(z2) != {0, 1}:
                raise SchemaError(f"{where}.{Z2_KEY}", 'expected {0: even, 1: odd}')
        if module is None and z2 is None:
            raise SchemaError(where, f"needs {SUMMANDS_KEY!r} or {Z2_KEY!r}")
        structures.append(SpincHF(index, module, d, z2))
    y = ManifoldHF(h1_order, structures, slope=slope, name=doc.get(NAME_KEY))
    stated = doc.get(TOTAL_REDUCED_DIM_KEY)
    if stated is not None and stated != y.total_reduced_dim:
        raise SchemaError(TOTAL_REDUCED_DIM_KEY,
                          f"states {stated} but the structures add up to "
                          f"{y.total_reduced_dim}")
    return y


def render_table(y):
    """
    Plain-text table of a ManifoldHF, one row per structure.
    """
    lines = [f"{y.name}   |H_1| = {y.h1_order}   dim HF_red = {y.total_reduced_dim}"]
    if y.h1_order == 0:
        lines.append(f"{'k':>4}  {'towers':<24}  {'even':>5}  {'odd':>5}")
        for s in y.structures:
            towers = ', '.join(str(t) for t in s.module.towers) if s.module else '-'
            dims = s.z2_dimensions()
            lines.append(f"{s.index:>4}  {towers:<24}  {dims[0]:>5}  {dims[1]:>5}")
        return '\n'.join(lines) + '\n'
    lines.append(f"{'i':>4}  {'d':>8}  reduced")
    for s in y.structures:
        reduced = ' + '.join(str(f) for f in s.module.finites) or '-'
        lines.append(f"{s.index:>4}  {format_rational(s.d):>8}  {reduced}")
    return '\n'.join(lines) + '\n'
