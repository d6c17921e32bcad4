"""Exceptional sequences over Nakayama algebras, computed exactly."""
from .algebra import (
    AlgebraSpecError,
    Indec,
    NakayamaAlgebra,
    hereditary_a,
    linear_rad2,
    parse_algebra_spec,
    parse_module,
    selfinjective,
)
from .excseq import (
    EnumResult,
    ExcSequence,
    NodeBudgetExceeded,
    enumerate_sequences,
    is_orthogonal,
    is_standard_exceptional,
    is_standard_pair,
    is_weak_exceptional,
    is_weak_pair,
    validate_sequence,
)
from .formulas import FamilyParams, predicted_count, predicted_size
from .homology import (
    ext1_dim,
    ext_dim,
    ext_region_contains,
    hom_dim,
    hom_region_contains,
    is_periodic,
    omega_orbit,
)
from .modcat import ZERO, describe_module, gamma, gamma_inv, is_projective, sigma, syzygy

__all__ = [
    "AlgebraSpecError", "Indec", "NakayamaAlgebra", "hereditary_a", "linear_rad2",
    "parse_algebra_spec", "parse_module", "selfinjective",
    "EnumResult", "ExcSequence", "NodeBudgetExceeded", "enumerate_sequences", "is_orthogonal",
    "is_standard_exceptional", "is_standard_pair", "is_weak_exceptional", "is_weak_pair",
    "validate_sequence", "ext1_dim", "ext_dim", "hom_dim", "is_periodic", "omega_orbit",
    "ext_region_contains", "hom_region_contains", "FamilyParams", "predicted_count", "predicted_size",
    "ZERO", "describe_module", "gamma", "gamma_inv", "is_projective", "sigma", "syzygy",
]
