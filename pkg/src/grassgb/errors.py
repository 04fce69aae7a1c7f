"""Exception types shared across the package."""


class SpecMismatchError(ValueError):
    """Operands live over different variable lists."""


class ExponentOverflowError(OverflowError):
    """A monomial exponent reached the configured bound."""


class NoLeadingMonomialError(ValueError):
    """The zero polynomial has no leading monomial."""


class ResourceBudgetError(RuntimeError):
    """A configured size or iteration budget was exceeded."""


class UnboundedEnumerationError(ValueError):
    """A monomial enumeration would not terminate."""
