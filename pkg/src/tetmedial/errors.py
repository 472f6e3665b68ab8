"""Exception types raised by tetmedial."""


class GeometryError(ValueError):
    """Base class for invalid-input errors in the geometry kernels."""


class NonPositiveLength(GeometryError):
    """An edge length is zero, negative, or not finite."""


class NotATriangle(GeometryError):
    """Three lengths violate the triangle inequality beyond tolerance."""


class NegativeRadicand(GeometryError):
    """A medial-area radicand is negative beyond tolerance."""


class NotRealizable(GeometryError):
    """Six lengths do not describe any tetrahedron in Euclidean 3-space."""


class DegenerateFrame(GeometryError):
    """The canonical apex-on-axis frame is ill-conditioned for this input."""


class ResamplingExhausted(RuntimeError):
    """Rejection sampling ran out of retries."""


class ParseError(ValueError):
    """Malformed batch input. ``position`` is the 1-based record or line index."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"record {position}: {message}"
        super().__init__(message)
