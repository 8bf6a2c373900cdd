"""Exception hierarchy shared by the numerical modules and the CLI."""


class SalpeterError(Exception):
    """Base class for errors raised by this package."""


class DomainError(SalpeterError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConvergenceError(SalpeterError, ArithmeticError):
    """An iterative procedure failed to reach its tolerance."""


class QuadratureError(ConvergenceError):
    """Adaptive quadrature gave up; carries the best estimate so far."""

    def __init__(self, message, value=float("nan"), error=float("inf")):
        super().__init__(f"{message} (estimate={value!r}, error={error!r})")
        self.value = value
        self.error = error


class DivergenceError(SalpeterError, ArithmeticError):
    """A series or moment integral does not converge."""


class BracketError(ConvergenceError):
    """No sign change / bound state was found inside the search range."""
