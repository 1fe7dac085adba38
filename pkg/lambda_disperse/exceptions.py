"""Exceptions and warnings raised by lambda-disperse."""


class LambdaDisperseError(Exception):
    """Base class for all lambda-disperse errors."""


class SchemeError(LambdaDisperseError, ValueError):
    """Parameters do not satisfy the preconditions of the requested closed form."""


class WeakProbeError(LambdaDisperseError, ValueError):
    """Probe Rabi frequency is outside the weak-probe regime of the closed forms."""


class GridError(LambdaDisperseError, ValueError):
    """Invalid sweep grid (bounds, ordering or point count)."""


class StepSizeError(LambdaDisperseError, ValueError):
    """Integrator time step too coarse for the fastest rate in the system."""


class NonUniqueSteadyStateError(LambdaDisperseError):
    """The generator has more than one stationary state."""


class IntegrationError(LambdaDisperseError):
    """Density matrix invariants drifted beyond tolerance during time integration."""


class LambdaDisperseWarning(UserWarning):
    """Base class for all lambda-disperse warnings."""


class DegenerateInputWarning(LambdaDisperseWarning):
    """A limiting branch was taken because the input sits on a degenerate point."""
