"""Exception types shared across the package."""


class DaisyError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(DaisyError):
    """An operation was asked to exceed its configured size cap."""


class UndecidedOverCap(CapExceeded):
    """An exact decision procedure refused an instance over its cap.

    Raised instead of returning a heuristic verdict: certification never
    guesses.
    """


class FormatError(DaisyError):
    """Malformed input file."""
