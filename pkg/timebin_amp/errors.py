"""Exception hierarchy for the time-bin amplifier simulator."""


class TimebinAmpError(Exception):
    """Base class for every error raised by this package."""


class DomainError(TimebinAmpError, ValueError):
    """A parameter lies outside its physical domain (t, eta, alpha/beta)."""


class ModeOverlapError(TimebinAmpError, ValueError):
    """Two operands claim the same optical mode."""


class ZeroStateError(TimebinAmpError, ValueError):
    """An operation needs a state with non-zero norm."""


class NonIsometricMapError(TimebinAmpError, ValueError):
    """A linear mode map does not preserve inner products."""


class CorrectionNotFoundError(TimebinAmpError):
    """No unique phase-flip correction restores the ideal output for a pattern."""


class NotationError(TimebinAmpError, ValueError):
    """Ket notation text could not be parsed."""
