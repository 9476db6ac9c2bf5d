class PyFSSTError(Exception):
    pass


class InvalidModeError(PyFSSTError, ValueError):
    pass


class UndefinedSNRError(PyFSSTError, ValueError):
    pass


class NotRealError(PyFSSTError, ValueError):
    pass


class LengthMismatchError(PyFSSTError, ValueError):
    pass


class WindowTooLongError(PyFSSTError, ValueError):
    pass


class InvalidOrderError(PyFSSTError, ValueError):
    pass


class MissingFieldError(PyFSSTError, KeyError):
    pass


class KindMismatchError(PyFSSTError, ValueError):
    pass


class GridMismatchError(PyFSSTError, ValueError):
    pass


class EmptyDistributionError(PyFSSTError, ValueError):
    pass


class InvalidBandError(PyFSSTError, ValueError):
    pass


class UnknownFormatError(PyFSSTError, ValueError):
    pass


class UsageError(PyFSSTError):
    pass
