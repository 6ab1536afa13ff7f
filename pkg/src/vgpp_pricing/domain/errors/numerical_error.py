class NumericalError(ArithmeticError):
    """Raised when a computation cannot produce the finite result its contract requires."""

    pass
