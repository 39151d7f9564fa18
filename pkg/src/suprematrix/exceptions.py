"""Exception and warning classes raised by suprematrix."""


class SuprematrixError(ValueError):
    """Base class for invalid inputs."""


class NotHermitianError(SuprematrixError):
    pass


class TraceError(SuprematrixError):
    """A matrix expected to have unit trace does not."""


class ProbabilityRangeError(SuprematrixError):
    """A probability lies outside [0, 1]."""


class ChannelError(SuprematrixError):
    """A channel description violates one of its invariants.

    The violated invariant is named in ``invariant`` (e.g. ``"unitarity"``,
    ``"completeness"``, ``"weights"``).
    """

    def __init__(self, message, invariant):
        super().__init__(message)
        self.invariant = invariant


class NonPhysicalStateWarning(UserWarning):
    """A state that is not positive semidefinite was fed to a channel."""
