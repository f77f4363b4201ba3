"""Exception types shared across the package.

Exit-code mapping used by the CLI: InvalidParams and config problems are
input errors (exit 1), solver/numerical failures are exit 2, and
statistical verification failures are exit 3.
"""


class SqueezerSimError(Exception):
    """Base class for all package-specific errors."""


class InvalidParams(SqueezerSimError):
    """Raised when a parameter set violates one or more invariants.

    Carries the complete list of violations, not just the first one.
    """

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class NegativeDiscriminant(SqueezerSimError):
    """The sigma3 quadratic has no real root: no lasing solution."""


class WrongRegime(SqueezerSimError):
    """An operation was evaluated outside its pump-regime validity domain."""


class Unreachable(SqueezerSimError):
    """A threshold cannot be reached for this parameter set."""


class RootFindFailure(SqueezerSimError):
    """A numerical root-find or Newton solve did not converge."""


class StepUnderflow(SqueezerSimError):
    """The adaptive integrator step fell below 1e-16 of the time span."""


class NonFiniteState(SqueezerSimError):
    """Integration produced NaN or infinite state components."""


class NoConvergence(SqueezerSimError):
    """Settling hit t_max while the derivative norm was still large."""


class DomainError(SqueezerSimError):
    """An argument lies outside the mathematical domain of the operation."""


class SingularMatrix(SqueezerSimError):
    """The frequency-domain system matrix is singular at this frequency."""


class TooShort(SqueezerSimError):
    """A time series is too short for the requested spectral estimate."""


class BandMismatch(SqueezerSimError):
    """The trusted comparison band contains no usable frequency bins."""
