"""Exception types shared across the package."""


class PoleAtCenterError(ZeroDivisionError):
    """Raised when a series expansion is requested at a pole of the function."""


class PrecisionError(ArithmeticError):
    """Raised when a numeric routine cannot certify the requested accuracy."""


class QuadratureError(PrecisionError):
    """Raised when quadrature refinement hits its node cap before converging."""
