"""
Exceptions raised by the polar n-complex library.

Every exception carries a human-readable ``message`` attribute, so the
management commands can report it without digging into ``args``:

>>> e = SingularScalar('1+e1 is a zero divisor')
>>> e.message
'1+e1 is a zero divisor'
>>> isinstance(e, PolarPCPException)
True
"""


class PolarPCPException(Exception):
    """
    Base class for every error raised by this package.
    """

    def __init__(self, message, *args, **kwargs):
        super().__init__(*(message, *args), **kwargs)
        self.message = message


class DimensionMismatch(PolarPCPException):
    """
    Operands do not agree on shape or on the tube length n.
    """


class SingularScalar(PolarPCPException):
    """
    Raised when inverting a zero divisor.
    """


class FieldError(PolarPCPException):
    """
    The operation is not defined for the field of its operand.
    """


class ParameterError(PolarPCPException):
    """
    Invalid configuration or argument value.
    """


class NonFiniteInput(PolarPCPException):
    """
    NaN or infinity found where finite values are required.
    """


class PhtFormatError(PolarPCPException):
    """
    A tensor file does not follow the PHT v1 layout.
    """
