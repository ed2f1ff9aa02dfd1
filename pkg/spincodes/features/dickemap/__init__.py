"""Dicke bootstrap: permutationally invariant qubit codes, Pauli machinery and transversal gates."""
from .multiqubit import (
    LATTICE,
    SWAPPED,
    LABELINGS,
    MultiqubitCode,
    bootstrap,
    popcounts,
    check_dense_qubits,
    dicke_dense,
)
from .paulis import (
    PauliString,
    PauliClass,
    pauli_classes,
    pauli_strings,
    pauli_apply,
    pauli_dense,
    sym_class_dense,
    sym_error_dense,
    sph_error_dense,
    sph_expansion,
    sym_matrix_element,
)
from .verifier import DENSE, SYMMETRIC, MODES, class_matrix, multiqubit_kl_check
from .transversal import (
    tensor_power_apply,
    intertwiner_check,
    spin_gate_matrix,
    transversal_action,
    closure_deviation,
    certify_group,
)
from .serialization import to_document, from_document, load_document

__all__ = [
    "LATTICE",
    "SWAPPED",
    "LABELINGS",
    "MultiqubitCode",
    "bootstrap",
    "popcounts",
    "check_dense_qubits",
    "dicke_dense",
    "PauliString",
    "PauliClass",
    "pauli_classes",
    "pauli_strings",
    "pauli_apply",
    "pauli_dense",
    "sym_class_dense",
    "sym_error_dense",
    "sph_error_dense",
    "sph_expansion",
    "sym_matrix_element",
    "DENSE",
    "SYMMETRIC",
    "MODES",
    "class_matrix",
    "multiqubit_kl_check",
    "tensor_power_apply",
    "intertwiner_check",
    "spin_gate_matrix",
    "transversal_action",
    "closure_deviation",
    "certify_group",
    "to_document",
    "from_document",
    "load_document",
]
