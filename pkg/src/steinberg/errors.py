"""Exception types shared across the library."""


class NotGeneralizedCartan(ValueError):
    """Matrix fails the generalized Cartan conditions."""


class NotFiniteType(ValueError):
    """Root closure did not terminate within the configured bound."""


class OrderCapExceeded(RuntimeError):
    """Weyl group enumeration grew past the configured cap."""


class MixedGroups(ValueError):
    """Operands belong to different Weyl groups."""


class ParseError(ValueError):
    """Unusable Cartan input: unknown type name or malformed matrix data."""


class InvalidSubset(ValueError):
    """Simple-reflection subset has out-of-range or duplicate indices."""
