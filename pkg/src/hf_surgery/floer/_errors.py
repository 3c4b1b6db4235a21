"""
Exceptions raised by hf_surgery. All of them are ValueErrors so callers
that only care about bad input can catch a single type.
"""


class HFSurgeryError(ValueError):
    """
    Base class for every error raised by the package.
    """


class InvalidGradingError(HFSurgeryError):
    """
    A grading is not an exact rational, or two gradings that must differ
    by an integer do not.
    """


class DomainError(HFSurgeryError):
    """
    A slope, Spin^c index or exponent is outside the domain of the
    operation.
    """


class WrongDispatchError(HFSurgeryError):
    """
    An operation was called with a slope of the wrong sign.
    """


class NotAnLSpaceKnotError(HFSurgeryError):
    """
    Torsion data, or surgery data, that cannot come from an L-space knot.
    """


class InsufficientDataError(HFSurgeryError):
    """
    The model lacks data (typically the mirror V-sequence) needed by the
    requested computation.
    """


class InconsistentModelError(HFSurgeryError):
    """
    The model data contradicts the structure theorems used by the
    computation.
    """


class SchemaError(HFSurgeryError):
    """
    A document does not match the expected schema.

    Parameters
    ----------

    field: str
        Dotted path of the offending field.

    msg: str
        What is wrong with it.
    """
    def __init__(self, field, msg):
        self.field = field
        super().__init__(f"{field}: {msg}")


class InvalidModelError(HFSurgeryError):
    """
    A knot document parsed but the model it describes fails validation.
    """
