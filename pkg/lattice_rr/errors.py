class DomainError(ValueError):
    """Base class of all errors caused by inputs outside an operation's domain."""


class NotCoprime(DomainError):
    pass


class NotCoprimeTotal(DomainError):
    pass


class NotPairwiseCoprime(DomainError):
    pass


class InvalidType(DomainError):
    pass


class InvalidInput(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class TooLarge(DomainError):
    pass


class ImaginaryResidue(ArithmeticError):
    pass


class NonIntegerChi(ArithmeticError):
    """The Riemann-Roch assembly produced a non-integer, i.e. a bug in the engine."""
