"""
Code JSON documents: MultiqubitCode <-> CodeDocument.
"""
from typing import Dict, Optional
import logging

from spincodes.core.exceptions import InvalidInputError
from spincodes.features.bindihedral import Irrep
from spincodes.models.schemas import CodeDocument, CodewordEntry, RepInfo
from spincodes.utils.helpers import format_amplitude, parse_amplitude
from .multiqubit import SWAPPED, MultiqubitCode

logger = logging.getLogger(__name__)


def to_document(
    code: MultiqubitCode,
    labeling: str = SWAPPED,
    residuals: Optional[Dict[str, float]] = None,
    conjectured: bool = False,
) -> CodeDocument:
    """
    Serialize a code with spin provenance and a declared distance.

    Raises:
        InvalidInputError: if the code has no provenance or no distance
    """
    if code.rep is None or code.d is None:
        raise InvalidInputError("Only codes with spin provenance and a declared distance serialize")

    zero, _ = code.presented(labeling)
    exact = code.presented_exact(labeling)
    codewords = [
        CodewordEntry(weight=w, amplitude=format_amplitude(zero[w]), exact=exact.get(w))
        for w in sorted(zero)
    ]
    return CodeDocument(
        n=code.n,
        d=code.d,
        j=str(code.j),
        group=code.group_info(),
        rep=RepInfo(b=code.rep.b, a=code.rep.a),
        labeling=labeling,
        codewords=codewords,
        residuals=dict(residuals or {}),
        conjectured=conjectured,
    )


def from_document(document: CodeDocument) -> MultiqubitCode:
    """Rebuild the code; the document's amplitudes are renormalized to absorb the decimal rounding."""
    zero = {entry.weight: parse_amplitude(entry.amplitude) for entry in document.codewords}
    norm = sum(value * value for value in zero.values()) ** 0.5
    if norm == 0:
        raise InvalidInputError("Code document has an all-zero codeword")
    zero = {w: value / norm for w, value in zero.items()}
    exact = {entry.weight: entry.exact for entry in document.codewords if entry.exact}
    code = MultiqubitCode.from_presented(
        n=document.n,
        zero=zero,
        labeling=document.labeling,
        rep=Irrep(document.rep.b, document.rep.a),
        d=document.d,
        exact=exact or None,
        group_name=document.group.name,
    )
    return code


def load_document(path: str) -> CodeDocument:
    with open(path, "r", encoding="utf-8") as handle:
        return CodeDocument.model_validate_json(handle.read())
