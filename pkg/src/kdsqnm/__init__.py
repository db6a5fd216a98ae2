"""kdsqnm: quasi-normal modes of Kerr-de Sitter black holes.

Separation of variables for the stationary wave operator, outgoing radial
solutions by boundary Taylor series, Wronskian zero-finding for resonances,
a mode-sum resolvent with exact zero-frequency residue checks, and a
time-domain ringdown simulator used as an independent oracle.
"""

from .errors import (
    AmbiguousCase,
    BasisTooSmall,
    BoundaryTooClose,
    BranchCollision,
    CFLViolation,
    ConfigError,
    ContourThroughSpectrum,
    DegenerateBranch,
    DegenerateHorizon,
    EscapedBox,
    ExtrapolationUnstable,
    KdsError,
    NearResonance,
    NoConvergence,
    NoHorizonRegion,
    NonzeroSpinUnsupported,
    OutsideDomain,
    PoorFit,
    SeriesDivergence,
    SlackViolated,
    TailNotConverged,
    ToleranceNotMet,
    TruncationWarning,
)
from .metric import (
    BlackHoleParams,
    KerrStarProfile,
    delta_r_eval,
    delta_theta_eval,
    derive_params,
    ergo_extent,
    kerr_star_profile,
)

__version__ = "0.1.0"
