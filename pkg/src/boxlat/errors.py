"""Exception hierarchy shared by every boxlat module."""


class BoxlatError(Exception):
    """Base class. ``span`` is filled in by the expression evaluator."""

    span = None


class NotAPoset(BoxlatError):
    pass


class NotALattice(BoxlatError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class SizeCapExceeded(BoxlatError):
    pass


class UnknownName(BoxlatError):
    pass


class ArityTooLarge(BoxlatError):
    pass


class NotAHomomorphism(BoxlatError):
    pass


class NotInjective(BoxlatError):
    pass


class NotComparable(BoxlatError):
    pass


class NotDefined(BoxlatError):
    pass


class NotConfined(BoxlatError):
    pass


class NotOneSensitive(BoxlatError):
    pass


class NotZeroPreserving(BoxlatError):
    pass


class NotSimple(BoxlatError):
    pass


class NotBijective(BoxlatError):
    pass


class PreconditionNotMet(BoxlatError):
    pass


class GeneratorOverflow(BoxlatError):
    pass


class ExprSyntaxError(BoxlatError):
    """Parse failure; ``column`` is 1-based."""

    def __init__(self, message, column):
        super().__init__(f"{message} at column {column}")
        self.column = column


class UnknownOperator(ExprSyntaxError):
    pass


class ArityMismatch(ExprSyntaxError):
    pass
