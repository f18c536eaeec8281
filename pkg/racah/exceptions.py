class DomainError(ValueError):
    """An argument outside the domain of a formula"""


class InvalidSymbol(DomainError):
    def __init__(self, verdict, message=None):
        self.verdict = verdict
        super().__init__(message or verdict)


class ForbiddenParent(InvalidSymbol):
    """Super symbol whose so(3) parent is not a valid 3-j symbol"""

    def __init__(self, verdict, message=None, flat_index=None):
        self.flat_index = flat_index
        super().__init__(verdict, message)


class ParityError(DomainError):
    pass


class InvariantViolation(RuntimeError):
    """A law the calculus must satisfy did not hold"""
