from .errors import (
    EmptyDistributionError,
    GridMismatchError,
    InvalidBandError,
    InvalidModeError,
    InvalidOrderError,
    KindMismatchError,
    LengthMismatchError,
    MissingFieldError,
    NotRealError,
    PyFSSTError,
    UndefinedSNRError,
    UnknownFormatError,
    UsageError,
    WindowTooLongError,
)

__all__ = [
    "PyFSSTError",
    "InvalidModeError",
    "UndefinedSNRError",
    "NotRealError",
    "LengthMismatchError",
    "WindowTooLongError",
    "InvalidOrderError",
    "MissingFieldError",
    "KindMismatchError",
    "GridMismatchError",
    "EmptyDistributionError",
    "InvalidBandError",
    "UnknownFormatError",
    "UsageError",
]
