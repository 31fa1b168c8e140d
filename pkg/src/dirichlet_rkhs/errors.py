"""Exception hierarchy shared by all modules."""


class DirichletError(Exception):
    """Base class for library errors."""


class DomainError(DirichletError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class ConvergenceError(DirichletError, ArithmeticError):
    """A series did not meet its stopping rule within the term budget."""


class ParityError(DomainError):
    """A vector's index parity does not match the transform's source subspace."""


class QuadratureError(DirichletError, RuntimeError):
    """A quadrature rule could not be constructed."""


class IndexRangeError(DomainError, IndexError):
    """A monomial index lies below the space's lowest admissible power."""
