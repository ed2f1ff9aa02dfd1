"""
Atlas of predicted code lengths over BD_2b, delta_a and odd distances.
"""
from collections import defaultdict
from typing import Dict, List, Optional, Tuple
import logging

import pandas as pd

from spincodes.core.config import get_settings
from spincodes.core.exceptions import InvalidInputError
from spincodes.core.parallel import map_parallel
from spincodes.features.bindihedral import Irrep, effective_degree
from spincodes.models.schemas import AtlasCell
from .lengths import predicted_length

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["b", "a", "d", "n", "faithful", "group_degree", "conjectured"]
CONJECTURED_MARK = "▲"


class AtlasService:
    """Builds and renders the predicted-length table."""

    def __init__(self):
        self.settings = get_settings()

    def cell(self, key: Tuple[int, int, int]) -> AtlasCell:
        b, a, d = key
        rep = Irrep(b, a)
        degree = effective_degree(rep)
        return AtlasCell(
            b=b,
            a=a,
            d=d,
            n=predicted_length(rep, d),
            faithful=degree == 2 * b,
            group_degree=degree,
            conjectured=d >= self.settings.conjectured_min_distance,
        )

    def atlas(self, b_max: int, d_max: int, max_workers: Optional[int] = None) -> List[AtlasCell]:
        """
        predicted_length over every b <= b_max, a <= b and odd d <= d_max, with group minima marked.

        Raises:
            InvalidInputError: for b_max < 1 or d_max < 1
        """
        if b_max < 1 or d_max < 1:
            raise InvalidInputError(f"Atlas bounds must be positive, got b_max={b_max}, d_max={d_max}")

        keys = [
            (b, a, d)
            for b in range(1, b_max + 1)
            for a in range(1, b + 1)
            for d in range(1, d_max + 1, 2)
        ]
        cells = map_parallel(self.cell, keys, max_workers=max_workers, label="atlas cell")
        cells = group_minima(cells)
        logger.info(f"✓ Atlas for b <= {b_max}, d <= {d_max}: {len(cells)} cells")
        return cells

    @staticmethod
    def to_frame(cells: List[AtlasCell]) -> pd.DataFrame:
        frame = pd.DataFrame([cell.model_dump() for cell in cells])
        if frame.empty:
            return pd.DataFrame(columns=CSV_COLUMNS + ["group_minimum"])
        return frame.sort_values(["b", "a", "d"]).reset_index(drop=True)

    def to_csv(self, cells: List[AtlasCell]) -> str:
        """CSV with columns b, a, d, n, faithful, group_degree, conjectured."""
        return self.to_frame(cells)[CSV_COLUMNS].to_csv(index=False)

    def to_markdown(self, cells: List[AtlasCell]) -> str:
        """
        One row per (BD_2b, delta_a), one column per d.

        Non-faithful rows are struck through, group minima are bold and
        conjectured columns carry a triangle.
        """
        frame = self.to_frame(cells)
        if frame.empty:
            return ""
        distances = sorted(frame["d"].unique())
        conjectured = {int(d) for d in frame.loc[frame["conjectured"], "d"].unique()}
        header = ["G", "irrep"] + [
            f"{d}{CONJECTURED_MARK}" if d in conjectured else str(d) for d in distances
        ]
        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join("---" for _ in header) + "|",
        ]
        for (b, a), rows in frame.groupby(["b", "a"], sort=True):
            by_d = {int(row.d): row for row in rows.itertuples()}
            entries = []
            for d in distances:
                row = by_d.get(int(d))
                if row is None:
                    entries.append("")
                    continue
                text = str(row.n)
                if row.group_minimum:
                    text = f"**{text}**"
                if not row.faithful:
                    text = f"~~{text}~~"
                entries.append(text)
            label = f"delta_{a}" if rows["faithful"].iloc[0] else f"~~delta_{a}~~"
            lines.append("| " + " | ".join([f"BD_{2 * b}", label] + entries) + " |")
        return "\n".join(lines) + "\n"


def group_minima(cells: List[AtlasCell]) -> List[AtlasCell]:
    """Mark, per (b, d), the smallest n over faithful irreps."""
    best: Dict[Tuple[int, int], int] = defaultdict(lambda: -1)
    for cell in cells:
        if not cell.faithful:
            continue
        key = (cell.b, cell.d)
        if best[key] < 0 or cell.n < best[key]:
            best[key] = cell.n
    return [
        cell.model_copy(update={"group_minimum": cell.faithful and cell.n == best[(cell.b, cell.d)]})
        for cell in cells
    ]


# Global instance
atlas_service = AtlasService()
