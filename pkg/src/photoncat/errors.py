"""Exception types shared across the package."""


class PhotoncatError(Exception):
    """Base class for all package-specific errors."""


class DegenerateState(PhotoncatError):
    """The requested superposition has (numerically) vanishing norm.

    Raised for the odd-parity families as gamma -> 0, where the two
    branches cancel before photon addition.
    """


class UnconvergedError(PhotoncatError):
    """A truncated-basis quantity failed its convergence check."""


class ZeroMeanPhoton(PhotoncatError):
    """Mean photon number is numerically zero; ratio witnesses undefined."""


class OddOrderError(PhotoncatError):
    """Quadrature-moment squeezing is defined for even orders only."""


class ConversionInconsistent(PhotoncatError):
    """Ordering inversion produced a table violating its structural identities.

    Signals a transcription failure in the closed-form moments rather than
    an ordinary numerical issue.
    """


class ConfigError(PhotoncatError):
    """A sweep configuration is malformed or violates a guard."""
