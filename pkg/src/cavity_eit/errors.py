"""Exception hierarchy for the cavity EIT noise engine."""


class CavityEITError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(CavityEITError, ValueError):
    pass


class NegativeRate(ParameterError):
    pass


class ZeroAtoms(ParameterError):
    pass


class AsymmetricCoupling(ParameterError):
    """Raised when a quantity defined only for g1 == g2 is requested."""


class ZeroDrive(ParameterError):
    pass


class DomainError(ParameterError):
    """Closed-form expression evaluated outside its range of validity."""


class NoConvergence(CavityEITError, RuntimeError):
    pass


class SingularJacobian(CavityEITError, RuntimeError):
    pass


class Unstable(CavityEITError, RuntimeError):
    """The linearized drift has an eigenvalue with positive real part."""

    def __init__(self, message, max_real=None):
        super().__init__(message)
        self.max_real = max_real


class NearSingular(CavityEITError, ArithmeticError):
    """The requested frequency collides with a marginal drift eigenvalue."""


class NoPeak(CavityEITError, LookupError):
    pass
