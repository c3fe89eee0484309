"""Exception types raised across the package."""


class MatroidError(ValueError):
    """Base class for malformed input and failed preconditions."""


class EmptyFamily(MatroidError):
    pass


class MixedCardinality(MatroidError):
    pass


class ExchangeAxiomViolation(MatroidError):
    def __init__(self, b1, b2, x):
        self.b1, self.b2, self.x = b1, b2, x
        super().__init__(
            f"basis exchange fails: B1={sorted(b1)} B2={sorted(b2)} x={x!r}")


class ZeroMatrix(MatroidError):
    pass


class InvalidGeometry(MatroidError):
    pass


class OverlappingSets(MatroidError):
    pass


class GlueElementDegenerate(MatroidError):
    pass


class LabelCollision(MatroidError):
    pass


class GroundTooLarge(MatroidError):
    pass


class DisconnectedGraph(MatroidError):
    pass


class NamespaceMismatch(MatroidError):
    pass


class RankDeficient(MatroidError):
    pass


class NonPositiveAssignment(MatroidError):
    pass


class ParseError(MatroidError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
