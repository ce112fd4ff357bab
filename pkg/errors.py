"""Exception hierarchy shared by every package in the project."""


class AssocCodesError(Exception):
    """Base class for all library errors."""


class ShapeError(AssocCodesError, ValueError):
    """Matrix or vector dimensions do not line up."""


class SchemeError(AssocCodesError, ValueError):
    """Invalid scheme parameters, or a basis that is not an association scheme."""


class SchemeSpecError(SchemeError):
    """A scheme spec string or product formula could not be parsed."""


class CheckMatrixError(AssocCodesError, ValueError):
    """Bad subset selection or row choice for a check matrix."""


class NonCommutingError(CheckMatrixError):
    """Check-matrix rows are not pairwise symplectic-orthogonal."""


class DependentRowsError(CheckMatrixError):
    """Every remaining row is dependent (or zero)."""


class PauliFormatError(AssocCodesError, ValueError):
    """Pauli string or check-matrix JSON is malformed."""


class DistanceInputError(AssocCodesError, ValueError):
    """A distance routine was called outside its supported range."""


class DistanceCeilingError(DistanceInputError):
    """n + k exceeds the exact-enumeration ceiling."""


class BoundViolationError(AssocCodesError):
    """A certified code violates a bound it must satisfy."""


class CatalogError(AssocCodesError):
    """Catalog file could not be read or written."""


class ConfigError(AssocCodesError, ValueError):
    """Invalid search or reproduction configuration."""


class UnknownTableError(AssocCodesError, KeyError):
    """Requested code table does not exist."""
