"""Exception types shared across the package."""


class StableFormsError(Exception):
    """Base class for every library-raised error."""


class ScalarContextError(StableFormsError):
    """Arithmetic attempted between scalars with incompatible radicands."""


class DimensionError(StableFormsError):
    """Operands have mismatched or unsupported dimension/degree."""


class DegenerateMetricError(StableFormsError):
    """A non-degenerate bilinear form was required."""


class OrbitError(StableFormsError):
    """Input form does not lie in the orbit the operation requires."""


class NullHyperplaneError(StableFormsError):
    """The hyperplane is null; the two-plus-three splitting is undefined."""


class NotCalibratedError(StableFormsError):
    """The plane fails the calibration test required by the operation."""


class EnumerationLimitError(StableFormsError):
    """Requested enumeration exceeds the configured size cap."""
