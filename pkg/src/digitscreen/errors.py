"""Exception hierarchy shared across the toolkit."""


class DigitScreenError(Exception):
    """Base class for all toolkit errors."""


class DomainError(DigitScreenError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ResourceError(DigitScreenError):
    """A request exceeds a configured resource cap."""


class InsufficientDataError(DigitScreenError):
    """Too few usable values to compute the requested statistic."""


class FormatError(DigitScreenError):
    """A malformed row in an input source; logged by ingest, never fatal."""


class IngestError(DigitScreenError):
    """An input source cannot be read at all (missing column, bad container)."""
