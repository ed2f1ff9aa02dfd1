"""Binary dihedral groups BD_{2b} and their symplectic irreps."""
from .group import (
    Irrep,
    GroupElement,
    identity,
    element_by_name,
    group_elements,
    generators,
    irrep_matrix,
    effective_degree,
    image_order,
    is_exotic_degree,
)
from .branching import (
    support_lattice,
    spin_character,
    irrep_character,
    multiplicity,
    first_spin_with_freedom,
    branching_table,
)

__all__ = [
    "Irrep",
    "GroupElement",
    "identity",
    "element_by_name",
    "group_elements",
    "generators",
    "irrep_matrix",
    "effective_degree",
    "image_order",
    "is_exotic_degree",
    "support_lattice",
    "spin_character",
    "irrep_character",
    "multiplicity",
    "first_spin_with_freedom",
    "branching_table",
]
