"""Exception hierarchy shared by all kdsqnm modules.

Every domain failure raises a subclass of :class:`KdsError`, so callers
(and the CLI) can distinguish domain errors from genuine bugs.
"""


class KdsError(Exception):
    """Base class for all domain errors raised by kdsqnm."""


# -- geometry / parameter validation ----------------------------------------

class NoHorizonRegion(KdsError):
    """No interval (r_minus, r_plus) with Delta_r > 0 exists."""


class DegenerateHorizon(KdsError):
    """Two roots of Delta_r are too close; surface gravity would vanish."""


class SlackViolated(KdsError):
    """The coordinate-profile inequality has no positive margin."""


# -- tortoise map / series ---------------------------------------------------

class SeriesDivergence(KdsError):
    """Coefficient ratio test failed to stabilize."""


class OutsideDomain(KdsError):
    """Evaluation point outside the valid domain of a map."""


# -- angular solver ----------------------------------------------------------

class BasisTooSmall(KdsError):
    """Requested eigenvalue branch not converged at this basis size."""


class BranchCollision(KdsError):
    """Two eigenvalue branches approached within tolerance while tracking.

    Carries the ambiguous step; non-fatal when used as a flag.
    """


# -- radial solver -----------------------------------------------------------

class TailNotConverged(KdsError):
    """Boundary series tail still significant at the matching point."""


class ToleranceNotMet(KdsError):
    """ODE integrator could not reach the requested tolerance."""


class NearResonance(KdsError):
    """Wronskian too small: Green's kernel ill-conditioned here."""


# -- resonance search --------------------------------------------------------

class NoConvergence(KdsError):
    """Newton/secant iteration did not converge."""


class EscapedBox(KdsError):
    """Root iterate left the inflated seed box."""


class BoundaryTooClose(KdsError):
    """|D| dips below threshold on a counting contour after max subdivision."""


class AmbiguousCase(KdsError):
    """Trapping classification inconclusive at grid resolution."""


# -- resolvent ---------------------------------------------------------------

class ContourThroughSpectrum(KdsError):
    """An integration contour passes through (or too near) a spectrum."""


class DegenerateBranch(KdsError):
    """Angular eigenvalue degeneracy: residue-sum resolvent refused."""


class TruncationWarning(KdsError):
    """Mode-sum truncation error above threshold (recoverable)."""


class ExtrapolationUnstable(KdsError):
    """Zero-limit extrapolation did not stabilize."""


# -- time-domain evolution ---------------------------------------------------

class CFLViolation(KdsError):
    """Requested time step violates the CFL stability bound."""


class NonzeroSpinUnsupported(KdsError):
    """Time-domain evolution only implements the a = 0 reduction."""


class PoorFit(KdsError):
    """Ringdown fit residual above 10% of windowed signal energy."""


# -- CLI / config ------------------------------------------------------------

class ConfigError(KdsError):
    """Malformed or unknown configuration key."""
