"""Exception types raised across the workbench."""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class LengthMismatch(WorkbenchError, ValueError):
    pass


class InvalidKey(WorkbenchError, ValueError):
    pass


class NonFiniteOrbit(WorkbenchError, ArithmeticError):
    """The coupled logistic map left the finite floats for this key."""


# PGM parsing
class BadMagic(WorkbenchError, ValueError):
    pass


class BadHeader(WorkbenchError, ValueError):
    pass


class TruncatedPixels(WorkbenchError, ValueError):
    pass


class UnsupportedMaxval(WorkbenchError, ValueError):
    pass


class BadKeyFile(WorkbenchError, ValueError):
    pass


# Attack-time failures, all of which mean the oracle does not behave like the cipher
class AmbiguousDifference(WorkbenchError, RuntimeError):
    pass


class InvalidIndex(WorkbenchError, RuntimeError):
    pass


class InsufficientPairs(WorkbenchError, ValueError):
    pass
