"""Exact tools for cyclic systems of simultaneous congruences."""

from .model import (
    CyclicSystem,
    DioInstance,
    DomainError,
    canonical,
    check_cyclic,
    check_hypersurface,
    gcd_condition,
    is_nontrivial,
    pairwise_coprime,
    reciprocal_sum,
    residual_m,
    to_congruence,
    to_diophantine,
)
from .sequences import (
    modulus_M_star,
    positive_bound,
    signed_coarse_bound,
    signed_sharp_bound,
    sylvester_u,
    v_seq,
)

__all__ = [
    "CyclicSystem",
    "DioInstance",
    "DomainError",
    "canonical",
    "check_cyclic",
    "check_hypersurface",
    "gcd_condition",
    "is_nontrivial",
    "pairwise_coprime",
    "reciprocal_sum",
    "residual_m",
    "to_congruence",
    "to_diophantine",
    "modulus_M_star",
    "positive_bound",
    "signed_coarse_bound",
    "signed_sharp_bound",
    "sylvester_u",
    "v_seq",
]

__version__ = "0.1.0"
