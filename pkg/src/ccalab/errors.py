"""Exceptions shared across the engine."""


class CCAError(Exception):
    """Base class for all engine errors."""


class ContextMismatchError(CCAError):
    """Operands live in different variable contexts."""


class UnitIdealError(CCAError):
    """Operation requires a proper ideal."""


class ZeroIdealError(CCAError):
    """Operation requires a nonzero ideal."""


class NotSquarefreeError(CCAError):
    """Operation requires a squarefree monomial ideal."""


class VoidComplexError(CCAError):
    """Operation requires a non-void simplicial complex."""


class ZeroDivisorError(CCAError):
    """Element is a zerodivisor where a non-zerodivisor is required."""


class MethodDisagreementError(CCAError):
    """Two independent computation paths produced different answers.

    This always signals an implementation bug and is never swallowed.
    """


class InfiniteLengthError(CCAError):
    """A length computation was requested for a module of infinite length."""


class PrecisionError(CCAError):
    """A truncated computation could not be certified inside its window."""
