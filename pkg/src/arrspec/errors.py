"""Exception hierarchy shared by the library and the CLI."""


class ArrspecError(Exception):
    """Base class for every error raised by arrspec."""


class LimitError(ArrspecError, ValueError):
    """An input exceeds a configured size limit."""


class ThresholdError(ArrspecError, ValueError):
    """A closed form was requested outside the range where it is proven."""


class IntegralityError(ArrspecError, ArithmeticError):
    """A floating-point eigenvalue is too far from every integer."""


class InternalError(ArrspecError, AssertionError):
    """An identity that must hold exactly did not; this indicates a bug."""
