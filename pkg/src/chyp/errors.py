"""Exception types raised by the library."""


class ChypError(ValueError):
    """Base class; every error here is a bad-input condition."""


class ZeroVector(ChypError):
    pass


class SingularMatrix(ChypError):
    pass


class NotJUnitary(ChypError):
    pass


class PositiveVector(ChypError):
    pass


class BoundaryPoint(ChypError):
    pass


class NumericallyAmbiguous(ChypError):
    pass


class NotElliptic(ChypError):
    pass


class UnsupportedClass(ChypError):
    pass


class InfiniteOrder(ChypError):
    pass


class OrderTooSmall(ChypError):
    pass


class LinesIntersect(ChypError):
    pass


class WrongSignature(ChypError):
    pass


class FixesInfinity(ChypError):
    pass


class InvalidSpec(ChypError):
    pass
