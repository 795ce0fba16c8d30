"""Exact tools for formally dual and formally self dual sets in finite abelian groups."""
from .cyclotomic import CyclotomicInt, cyclo_as_rational, cyclo_norm
from .duality import (DualityCertificate, SetInGroup, char_sum, is_formally_dual_pair,
                      is_formally_self_dual, is_primitive, reduce_to_primitive, weight_enumerator)
from .errors import (CapacityError, DimensionError, DomainError, FsdError,
                     InternalConsistencyError, InvariantError)
from .groups import Group, Subgroup, enumerate_subgroups, quotient_group, smallest_containing_coset
from .pairing import (Pairing, adjoint_pairing, annihilator, enumerate_pairings, pairing_eval,
                      pairing_is_nondegenerate, sigma_automorphism, standard_pairing)

__version__ = "0.1.0"

__all__ = [
    "CyclotomicInt", "cyclo_as_rational", "cyclo_norm", "DualityCertificate", "SetInGroup",
    "char_sum", "is_formally_dual_pair", "is_formally_self_dual", "is_primitive",
    "reduce_to_primitive", "weight_enumerator", "CapacityError", "DimensionError", "DomainError",
    "FsdError", "InternalConsistencyError", "InvariantError", "Group", "Subgroup",
    "enumerate_subgroups", "quotient_group", "smallest_containing_coset", "Pairing",
    "adjoint_pairing", "annihilator", "enumerate_pairings", "pairing_eval",
    "pairing_is_nondegenerate", "sigma_automorphism", "standard_pairing", "__version__",
]
