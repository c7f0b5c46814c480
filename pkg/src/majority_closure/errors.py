"""Exception hierarchy shared by every module of the package."""


class MajorityClosureError(Exception):
    """Base class for all errors raised by this package."""


class ConflictingEdge(MajorityClosureError):
    pass


class IndexOutOfRange(MajorityClosureError):
    pass


class TooFewCandidates(MajorityClosureError):
    pass


class OrbitTooLarge(MajorityClosureError):
    pass


class WeightsDoNotSumToOne(MajorityClosureError):
    pass


class DimensionMismatch(MajorityClosureError):
    pass


class NotFull(MajorityClosureError):
    pass


class SamePair(MajorityClosureError):
    pass


class OutOfUnitInterval(MajorityClosureError):
    pass


class TooManyCandidates(MajorityClosureError):
    pass


class MalformedProgram(MajorityClosureError):
    pass


class BalancedFamily(MajorityClosureError):
    """No asymmetric valency certificate exists: every member of the family is balanced."""


class NotRealizable(MajorityClosureError):
    pass


class NotBalanced(MajorityClosureError):
    pass


class NotPseudoBalanced(MajorityClosureError):
    pass


class BalancedTriangleMissing(MajorityClosureError):
    pass


class RepeatedVertex(MajorityClosureError):
    pass


class TooShort(MajorityClosureError):
    pass


class ScopeTooLarge(MajorityClosureError):
    pass


class CyclicNeedsOddN(MajorityClosureError):
    pass


class ParseError(MajorityClosureError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
