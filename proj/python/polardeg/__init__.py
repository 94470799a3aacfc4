"""Degrees of polar maps and of Gauss maps of logarithmic foliations.

Polynomials are passed as text in x0, x1, ...; weights as "1,-1,2/3".
Degree computations are randomized over F_p and return DegreeReport
objects (value, stable, trials).
"""

from ._polardeg import (
    DEFAULT_PRIME,
    DegreeReport,
    DomainError,
    Error,
    ParseError,
    ResourceLimit,
    RingMismatch,
    TrialOutcome,
    VerificationOutcome,
    foliation,
    gauss_degree,
    is_homaloidal,
    parse_poly,
    polar_degree,
    polar_map,
    polar_profile,
    sing_degree,
    verify_corollary_deg,
    verify_dolgachev,
    verify_gauss,
    verify_invariance,
    verify_polar_relation,
    verify_product_bound,
    verify_resonance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
