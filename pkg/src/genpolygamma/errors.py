"""Exception types raised by the numerical routines."""


class PoleError(ValueError):
    """Argument sits on (or within the snap window of) a pole."""


class DomainError(ValueError):
    """Argument lies outside the supported domain of a routine."""


class NoConvergenceError(ArithmeticError):
    """A series or quadrature failed to reach its tolerance within budget."""


class HypothesisError(ValueError):
    """Parameters violate the validity region of an identity being checked."""


class NonFiniteIntegrandError(ArithmeticError):
    """An integrand returned NaN or infinity at an interior quadrature node."""
