"""Closed-form code families, length laws and the predicted-length atlas."""
from typing import List, Optional

from spincodes.models.schemas import AtlasCell
from .lengths import CODE3_B, code3_length, predicted_spin, predicted_length, predicted_length_closed, code3_irrep
from .constructions import family_d3, code1, code2, code3
from .atlas_service import AtlasService, atlas_service, group_minima


def atlas(b_max: int, d_max: int, max_workers: Optional[int] = None) -> List[AtlasCell]:
    return atlas_service.atlas(b_max, d_max, max_workers)


__all__ = [
    "CODE3_B",
    "code3_length",
    "predicted_spin",
    "predicted_length",
    "predicted_length_closed",
    "code3_irrep",
    "family_d3",
    "code1",
    "code2",
    "code3",
    "AtlasService",
    "atlas_service",
    "group_minima",
    "atlas",
]
