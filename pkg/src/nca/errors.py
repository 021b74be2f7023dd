"""Exception hierarchy. Every error carries a stable machine-readable ``code``."""


class NCAError(ValueError):
    code = "error"


class ShapeError(NCAError):
    code = "shape_containment"


class MalformedPartError(NCAError):
    code = "malformed_part"


class InvalidReadingError(NCAError):
    code = "invalid_reading"


class ClassificationError(NCAError):
    code = "classification"


class MissingAssignmentError(NCAError):
    code = "missing_assignment"


class DegenerateFactorError(NCAError):
    code = "degenerate_factor"


class DimensionError(NCAError):
    code = "dimension_mismatch"


class ActionDomainError(NCAError):
    code = "action_domain"


class UnsupportedShapeError(NCAError):
    code = "unsupported_shape"


class WiringDiagramError(NCAError):
    code = "not_a_wiring_diagram"


class RankMismatchError(NCAError):
    code = "rank_mismatch"


class WeightMismatchError(NCAError):
    code = "weight_mismatch"


class OutOfRangeError(NCAError):
    code = "out_of_range"


class ZeroElementError(NCAError):
    code = "zero_element"


class InconsistentSystemError(NCAError):
    """Raised when a solve that a theorem guarantees to be consistent is not."""

    code = "internal_inconsistent"


class NonTerminationError(NCAError):
    code = "internal_non_termination"
