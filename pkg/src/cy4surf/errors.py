"""Exception hierarchy shared by every module of the package."""


class Cy4SurfError(Exception):
    """Base class for all errors raised by cy4surf."""


# arithmetic
class ZeroInversion(Cy4SurfError, ZeroDivisionError):
    pass


class NonInvertible(Cy4SurfError, ArithmeticError):
    """A zero divisor was inverted in an extension with reducible modulus."""


class FieldError(Cy4SurfError, ValueError):
    pass


# polynomials
class FieldMismatch(Cy4SurfError, ValueError):
    pass


class VariableCountMismatch(Cy4SurfError, ValueError):
    pass


class BasisMismatch(Cy4SurfError, ValueError):
    pass


class RingMismatch(Cy4SurfError, ValueError):
    pass


class NotHomogeneous(Cy4SurfError, ValueError):
    pass


# chern calculus
class NonUnitLeadingTerm(Cy4SurfError, ValueError):
    pass


class NonIntegerChi(Cy4SurfError, ArithmeticError):
    pass


class ConsistencyFailure(Cy4SurfError, ArithmeticError):
    pass


# normal bundle
class NotInIdeal(Cy4SurfError, ValueError):
    """The Calabi-Yau equation is not in the surface ideal, i.e. S is not inside X."""


class RegularityViolation(Cy4SurfError, ValueError):
    pass


# invariants
class NonIntegerRho(Cy4SurfError, ArithmeticError):
    pass


class NegativeRho(Cy4SurfError, ArithmeticError):
    pass


class HalfIntegerError(Cy4SurfError, ArithmeticError):
    pass


# configuration
class ParseError(Cy4SurfError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class ValidationError(Cy4SurfError, ValueError):
    pass
