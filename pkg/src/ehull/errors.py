"""Exception hierarchy shared by all modules."""


class EHullError(Exception):
    """Base class for errors raised by ehull."""


class DimensionError(EHullError, ValueError):
    """Operands have incompatible lengths or shapes."""


class MatrixFormatError(EHullError, ValueError):
    """A matrix file or string could not be parsed."""


class GuardExceeded(EHullError):
    """An exhaustive enumeration would exceed its size guard."""


class HypothesisError(EHullError):
    """A hypothesis or construction precondition does not hold."""


class NotFreeError(HypothesisError):
    """The operation is only defined for free codes."""


class NoAdmissiblePairError(HypothesisError):
    """No (x, y) pair satisfies the parity-side hypotheses."""


class FormulaMismatch(EHullError, AssertionError):
    """A closed-form result disagrees with the direct computation."""

    def __init__(self, message: str, formula: int, direct: int) -> None:
        super().__init__(message)
        self.formula = formula
        self.direct = direct
