"""
Utility functions shared across hf_surgery: YAML documents and the
defaults file.
"""

import os

import yaml

from hf_surgery.floer._constants import SCHEMA_KEY, SCHEMA_VERSION
from hf_surgery.floer._errors import SchemaError

import logging

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

DEFAULTS_FILE = os.path.join(os.path.dirname(__file__), 'surgery_defaults.yaml')
EXAMPLES_DIR = os.path.join(os.path.dirname(__file__), 'examples', 'data')


def load_document(path):
    """
    Loads a YAML document from a file and checks the schema header.

    Parameters
    ----------

    path: str
        Path of the document.

    Returns
    -------

    dict:
        The parsed document.
    """
    with open(path, 'r') as f:
        try:
            doc = yaml.safe_load(f)
        except yaml.YAMLError as e:
            mark = getattr(e, 'problem_mark', None)
            where = f"line {mark.line + 1}" if mark is not None else path
            raise SchemaError(where, f"not valid YAML ({e})")
    return check_header(doc)


def check_header(doc):
    """
    Checks that a parsed document is a mapping carrying the supported
    `schema` version and returns it.
    """
    if not isinstance(doc, dict):
        raise SchemaError('<root>', 'document must be a mapping')
    if doc.get(SCHEMA_KEY) != SCHEMA_VERSION:
        raise SchemaError(SCHEMA_KEY, f"expected schema {SCHEMA_VERSION}, "
                                      f"found {doc.get(SCHEMA_KEY)!r}")
    return doc


def dump_document(doc, stream=None):
    """
    Serializes a document as block-style YAML with keys kept in insertion
    order, so that identical documents always give identical bytes.
    """
    return yaml.safe_dump(doc, stream, sort_keys=False,
                          default_flow_style=False, allow_unicode=True)


def load_defaults(path=None):
    """
    Loads the YAML defaults file (oracle parameters, pool size and so on).

    Parameters
    ----------

    path: str
        Alternative defaults file; the bundled one is used when None.

    Returns
    -------

    dict:
        The configuration dictionary.
    """
    with open(path or DEFAULTS_FILE, 'r') as f:
        cfg_dict = yaml.safe_load(f)
    return cfg_dict or {}


def dump_documents(docs, stream=None):
    """
    Serializes several documents as one YAML stream, one document each.
    """
    return yaml.safe_dump_all(docs, stream, sort_keys=False,
                              default_flow_style=False, allow_unicode=True)


def example_path(name):
    """
    Path of a bundled example document, e.g. example_path('trefoil').
    """
    return os.path.join(EXAMPLES_DIR, f"{name}.yaml")
