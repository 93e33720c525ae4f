"""Exception types shared by the kernels and the library."""


class NumericalFailure(ArithmeticError):
    """An iterative routine did not converge within its iteration cap."""
