"""Exception hierarchy shared by every module of the package."""


class BisectorError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(BisectorError, TypeError):
    pass


class DivisionByZero(BisectorError, ZeroDivisionError):
    pass


class UnsupportedInMode(BisectorError):
    """The operation needs data the current field mode cannot represent exactly."""


class CoincidentPoints(BisectorError, ValueError):
    pass


class IdenticalLines(BisectorError, ValueError):
    pass


class InvalidQuadrilateral(BisectorError, ValueError):
    pass


class SingularMap(BisectorError, ValueError):
    pass


class VertexAtInfinity(BisectorError, ValueError):
    pass


class IdentityCheckFailed(BisectorError, AssertionError):
    """An internal algebraic identity did not hold; indicates a bug."""


class BothZero(BisectorError, ValueError):
    pass


class ZeroForm(BisectorError, ValueError):
    pass


class NoFiniteDiagonalPoint(BisectorError, ValueError):
    pass


class NoNonParallelPair(BisectorError, ValueError):
    pass


class NotStandardForm(BisectorError, ValueError):
    pass


class NotASquare(BisectorError, ValueError):
    pass


class ParallelPair(BisectorError, ValueError):
    pass


class NotAPair(BisectorError, ValueError):
    pass


class WrongClass(BisectorError, ValueError):
    pass


class UnrealizableField(BisectorError, ValueError):
    """No quadrilateral over the base field has the requested standard-form data."""


class SingularPoint(BisectorError, ValueError):
    pass


class PointNotOnCurve(BisectorError, ValueError):
    pass


class FieldTooLarge(BisectorError, ValueError):
    pass


class SchemaError(BisectorError, ValueError):
    pass
