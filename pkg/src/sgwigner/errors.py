"""Exception types raised by the numerical routines.

All inherit from SgWignerError so callers (and the CLI) can distinguish a
numerical/model failure from ordinary usage errors.
"""


class SgWignerError(Exception):
    """Base class for all library-specific failures."""


class GammaZero(SgWignerError):
    """Closed forms are written in the scaled time tau = gamma*t and
    degenerate at gamma = 0; use the small-tau expansions or the PDE solver."""


class DegenerateQuadratic(SgWignerError):
    """The quadratic form of the off-diagonal exponent lost rank; this
    signals inconsistent parameters rather than a physical regime."""


class NotPositiveDefinite(SgWignerError):
    """The real part of a Gaussian exponent is not negative definite, so the
    phase-space integral diverges."""


class BracketInvalid(SgWignerError):
    """The bracket handed to the decoherence-time solver does not straddle
    the 1/e crossing."""


class CflViolation(SgWignerError):
    """An advection substep would move mass across more than ~one cell."""


class PhaseUnderResolved(SgWignerError):
    """The pointwise phase rotation per step exceeds the resolution bound."""


class NonFiniteField(SgWignerError):
    """A grid field picked up NaN/Inf values during evolution."""


class StepTooLarge(SgWignerError):
    """RK4 step too coarse for the friction rate (gamma*dt > 0.1)."""


class IoFailure(SgWignerError):
    """A file export/import failed; message carries path and cause."""
