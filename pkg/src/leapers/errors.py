"""Exception types shared across the package."""


class LeaperError(Exception):
    """Base class for every error raised by this package."""


class DegreeViolation(LeaperError):
    pass


class UnmatchedClass(LeaperError):
    pass


class NotSkewBasic(LeaperError):
    pass


class InvalidEcf(LeaperError):
    pass


class InvalidProportions(LeaperError):
    pass


class NotAFrameCycle(LeaperError):
    pass


class NotProper(LeaperError):
    pass


class NotACycleOfL(LeaperError):
    pass


class Inapplicable(LeaperError):
    pass


class AmbiguousDirection(LeaperError):
    pass


class NotALeaperMove(LeaperError):
    pass


class NontrivialCycleError(LeaperError):
    def __init__(self, cycle, message=None):
        self.cycle = list(cycle)
        super().__init__(message or f"nontrivial cycle of length {len(self.cycle)}")


class NotConnected(LeaperError):
    pass


class NotACycleGraph(LeaperError):
    pass


class NotDual(LeaperError):
    pass


class Unsupported(LeaperError):
    pass


class InconsistentSignature(LeaperError):
    pass


class NotRealizable(LeaperError):
    pass


class InvalidOrigin(LeaperError):
    pass


class NotPerfectInput(LeaperError):
    pass


class MismatchedSquares(LeaperError):
    pass


class NotBijective(LeaperError):
    pass


class InvalidSpec(LeaperError):
    pass


class NotOnBoard(LeaperError):
    pass


class EmptyBoard(LeaperError):
    pass


class UnknownSuite(LeaperError):
    pass
