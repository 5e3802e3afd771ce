"""Sharp radii of starlikeness for analytic-function classes with fixed second coefficient.

The library computes, for three source classes (h1, h2, h3) parameterized by
their fixed second coefficients, the largest radius rho such that every class
member restricted to |z| < rho maps into one of ten starlike target regions
(half-plane of order alpha, lemniscate, parabola, exponential, cardioid, sine,
lune, rational, nephroid, modified sigmoid).  Radii come from explicit
equations cross-checked against independent bisection of the underlying disc
bounds, with extremal functions available to certify sharpness numerically.
"""

from .bounds import (
    ClassParams,
    LowerBoundBranch,
    disc_bound,
    lemma2_condition,
    mccarty_lower,
    mccarty_upper,
    refined_h2_lower,
)
from .errors import (
    DomainError,
    InfeasibleParams,
    InvalidExtremal,
    NearPole,
    NoBoundaryOnRay,
    NoRoot,
    OutOfWindow,
    StarlikeRadiiError,
    TooCloseToBoundary,
    WrongVariant,
)
from .extremal import ExtremalKind, FactoredFunction, build_extremal, log_derivative, sharpness_residual
from .radii import (
    Polynomial,
    RadiusResult,
    TranscendentalEquation,
    compute_radius,
    radius_table,
    smallest_root,
    theorem_equation,
)
from .regions import (
    Region,
    RegionKind,
    all_regions,
    boundary_point,
    boundary_polyline,
    contains,
    inclusion_radius,
    region,
    starlike,
    winding_membership,
)
from .verify import (
    VerificationReport,
    verify_lemma_bounds,
    verify_polynomial_crosscheck,
    verify_radius_tightness,
)

__version__ = "0.1.0"

__all__ = [
    "ClassParams",
    "DomainError",
    "ExtremalKind",
    "FactoredFunction",
    "InfeasibleParams",
    "InvalidExtremal",
    "LowerBoundBranch",
    "NearPole",
    "NoBoundaryOnRay",
    "NoRoot",
    "OutOfWindow",
    "Polynomial",
    "RadiusResult",
    "Region",
    "RegionKind",
    "StarlikeRadiiError",
    "TooCloseToBoundary",
    "TranscendentalEquation",
    "VerificationReport",
    "WrongVariant",
    "all_regions",
    "boundary_point",
    "boundary_polyline",
    "build_extremal",
    "compute_radius",
    "contains",
    "disc_bound",
    "inclusion_radius",
    "lemma2_condition",
    "log_derivative",
    "mccarty_lower",
    "mccarty_upper",
    "radius_table",
    "refined_h2_lower",
    "region",
    "sharpness_residual",
    "smallest_root",
    "starlike",
    "theorem_equation",
    "verify_lemma_bounds",
    "verify_polynomial_crosscheck",
    "verify_radius_tightness",
    "winding_membership",
]
