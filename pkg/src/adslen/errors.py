"""Exception types shared across the library."""


class GeometryError(ValueError):
    """Base class for geometric/algebraic domain violations."""


class NonInvertibleError(GeometryError):
    """Inverse of a zero divisor requested."""


class DomainError(GeometryError):
    """Argument outside the domain of the operation (e.g. log off B+)."""


class DegenerateConfigurationError(GeometryError):
    """Point configuration degenerate for the requested cross-ratio or projection."""


class ConstraintError(GeometryError):
    """Structural constraint violated (completeness, normalization, ...)."""


class ElementTypeError(GeometryError):
    """Isometry of the wrong trace type (elliptic/parabolic/hyperbolic)."""


class NonFuchsianError(GeometryError):
    """Cross-ratio configuration incompatible with a Fuchsian holonomy."""


class SeparationError(GeometryError):
    """Causal type of a point pair incompatible with the requested distance."""


class RankError(GeometryError):
    """Matrix rank incompatible with a boundary point."""


class OrthogonalityError(GeometryError):
    """Vectors fail a required orthogonality or unit-norm condition."""


class SupportError(GeometryError):
    """Measured lamination not supported in the reference lamination."""
