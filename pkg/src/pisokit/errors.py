class ArrowError(ValueError):
    """Base class for ill-formed arrows and undefined operations."""


class TypingError(ArrowError):
    pass


class OrthogonalityError(ArrowError):
    pass


class JoinUndefined(ArrowError):
    def __init__(self, msg: str = "join undefined"):
        super().__init__(msg)


class NeedsLongerInput(ArrowError):
    """Raised by ``apply`` when the input string is too short to decide."""
