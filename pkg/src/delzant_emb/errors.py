"""Exception types raised by delzant_emb."""


class DelzantEmbError(ValueError):
    """Base class for all errors raised by this package."""


class DegeneratePolytope(DelzantEmbError):
    pass


class DimensionTooLarge(DelzantEmbError):
    pass


class DimensionMismatch(DelzantEmbError):
    pass


class UnboundedRegion(DelzantEmbError):
    pass


class EmptyRegion(DelzantEmbError):
    pass


class ZeroVector(DelzantEmbError):
    pass


class ZeroSegment(DelzantEmbError):
    pass


class IndexOutOfRange(DelzantEmbError, IndexError):
    pass


class NotDelzant(DelzantEmbError):
    """The polytope fails one of the Delzant conditions."""


class NotDelzantVertex(NotDelzant):
    """A single vertex is not smooth (or not simple)."""


class NonSimpleVertex(NotDelzantVertex):
    """A vertex does not meet exactly ``dim`` edges."""


class ChopTooLarge(DelzantEmbError):
    pass


class NegativeRadius(DelzantEmbError):
    pass


class DimensionNotRenderable(DelzantEmbError):
    pass


class UnknownEntry(DelzantEmbError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class InvalidParameters(DelzantEmbError):
    pass
