"""Exception types shared across the package."""


class QKSeidelError(Exception):
    """Base class for all package errors."""


class VerificationError(QKSeidelError):
    """An identity that the engine must certify failed to hold."""


class SizeLimitError(QKSeidelError):
    """A symbolic computation exceeded the configured term budget."""


class NonReducedWordError(QKSeidelError):
    """A word claimed to be reduced is not."""


class UnsupportedProductError(QKSeidelError):
    """A product outside the partial multiplication calculus was requested."""
