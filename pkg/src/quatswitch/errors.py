"""Exception hierarchy shared by every module of the package."""


class QuatSwitchError(Exception):
    """Base class for all errors raised by quatswitch."""


class DivisionByZero(QuatSwitchError, ZeroDivisionError):
    pass


class DescriptorMismatch(QuatSwitchError, TypeError):
    """Operands live in different fields."""


class ScalarParseError(QuatSwitchError, ValueError):
    pass


class SingularMatrix(QuatSwitchError, ValueError):
    pass


class SingularInput(SingularMatrix):
    """One of A, B, A - 1 is not invertible.

    ``which`` names the offending matrix.
    """

    def __init__(self, which, message=None):
        self.which = which
        super().__init__(message or f"{which} is not invertible")


class ZeroInput(QuatSwitchError, ValueError):
    pass


class NotASolution(QuatSwitchError, ValueError):
    pass


class CommutingPair(QuatSwitchError, ValueError):
    pass


class NonCommutingInputs(QuatSwitchError, ValueError):
    pass


class TripleIndependent(QuatSwitchError, ValueError):
    """a, b and a x b are linearly independent, so no lambda relation exists."""


class PoleAtA0(QuatSwitchError, ValueError):
    pass


class InvalidParams(QuatSwitchError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid hyperbolic parameters: " + "; ".join(self.violations))


class NonInvertibleSwitch(QuatSwitchError, ValueError):
    pass


class DiagramSyntaxError(QuatSwitchError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (token {position})"
        super().__init__(message)


class DiagramValidationError(QuatSwitchError, ValueError):
    pass


class BraidIndexError(QuatSwitchError, IndexError):
    pass


class BadPosition(QuatSwitchError, IndexError):
    pass


class DepthExceedsDimension(QuatSwitchError, ValueError):
    pass
