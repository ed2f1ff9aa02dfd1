"""Angular-momentum kernels: Clebsch-Gordan values, spherical tensors, gate actions."""
from .halfint import HalfInt, SignedSqrtRational, magnetic_numbers, index_of
from .clebsch import cg
from .tensors import SphericalTensor, spherical_tensor, tensor_matrix, tensor_components, decompose_product
from .gates import GateAction, gate_matrix, gate_apply, conjugation_rule

__all__ = [
    "HalfInt",
    "SignedSqrtRational",
    "magnetic_numbers",
    "index_of",
    "cg",
    "SphericalTensor",
    "spherical_tensor",
    "tensor_matrix",
    "tensor_components",
    "decompose_product",
    "GateAction",
    "gate_matrix",
    "gate_apply",
    "conjugation_rule",
]
