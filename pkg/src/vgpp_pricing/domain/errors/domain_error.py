class DomainError(ValueError):
    """Raised when a parameter or precondition of a law, process or pricer is violated."""

    pass
