from .bott import bott_dim, bott_vector, euler_char
from .cech import CechResult, CechStabilityError, EulerCharacteristicError, cech_hypercohomology, default_bound
from .complexes import LineBundleComplex, lbc_change_field, lbc_dual, lbc_tensor, lbc_twist
from .display import monad_cohomology
from .table import CohomologyTable

__all__ = [
    "bott_dim", "bott_vector", "euler_char",
    "CechResult", "CechStabilityError", "EulerCharacteristicError", "cech_hypercohomology",
    "default_bound",
    "LineBundleComplex", "lbc_change_field", "lbc_dual", "lbc_tensor", "lbc_twist",
    "monad_cohomology", "CohomologyTable",
]
