"""Exception hierarchy shared by all geoqm modules."""


class GeometryError(ValueError):
    """Base class for every domain error raised by geoqm."""


class DimensionError(GeometryError):
    """Array shapes do not match, or a dimension is unsupported."""


class NotHermitianError(GeometryError):
    """An operator that must be Hermitian (or anti-Hermitian) is not."""


class DensityError(GeometryError):
    """A matrix fails one of the density-state invariants."""


class SingularPointError(GeometryError):
    """Evaluation at a point where the object is undefined (zero vector, origin)."""


class TangencyError(GeometryError):
    """A vector that must be tangent to an orbit is not."""
