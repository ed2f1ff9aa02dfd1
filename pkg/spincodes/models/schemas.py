from pydantic import BaseModel, ConfigDict, Field
from typing import Optional, List, Dict, Tuple


class KLConditionResult(BaseModel):
    """One Knill-Laflamme condition and how far it is from holding."""
    kind: str  # 'on-diag' or 'off-diag'
    residual: float = Field(..., ge=0)
    k: Optional[int] = None  # spin-side rank
    q: Optional[int] = None  # spin-side component
    error: Optional[str] = None  # Pauli string or Pauli class label


class KLReport(BaseModel):
    """Result of a KL check; pass <=> max_residual < tolerance."""
    model_config = ConfigDict(populate_by_name=True)

    mode: str  # 'spin', 'reduced', 'dense' or 'symmetric'
    d: int
    tolerance: float
    conditions: List[KLConditionResult] = Field(default_factory=list)
    max_residual: float = 0.0
    passed: bool = Field(False, alias="pass")

    @classmethod
    def from_conditions(cls, mode: str, d: int, tolerance: float, conditions: List[KLConditionResult]) -> "KLReport":
        max_residual = max((c.residual for c in conditions), default=0.0)
        return cls(
            mode=mode,
            d=d,
            tolerance=tolerance,
            conditions=conditions,
            max_residual=max_residual,
            passed=max_residual < tolerance,
        )

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class RepInfo(BaseModel):
    """Irrep label (b, a)."""
    b: int = Field(..., ge=1)
    a: int = Field(..., ge=1)


class GroupInfo(BaseModel):
    """Transversal group actually implemented by the code."""
    degree: int  # 2b'
    faithful: bool
    exotic: bool
    generators: List[str]
    name: Optional[str] = None  # e.g. "Q^(3)"


class CodewordEntry(BaseModel):
    """Amplitude of the logical zero on one Dicke weight."""
    weight: int = Field(..., ge=0)
    amplitude: str  # 17 significant digits
    exact: Optional[str] = None  # e.g. 'sqrt(5)/4'


class CodeParams(BaseModel):
    """((n, K, d, G)) plus the irrep."""
    n: int
    K: int = 2
    d: int
    rep: RepInfo
    group: GroupInfo


class CodeDocument(BaseModel):
    """The code JSON file format."""
    n: int
    K: int = 2
    d: int
    j: str  # spin of the originating spin code, e.g. '11/2'
    group: GroupInfo
    rep: RepInfo
    labeling: str = "swapped"  # 'swapped' or 'lattice'
    codewords: List[CodewordEntry]
    residuals: Dict[str, float] = Field(default_factory=dict)
    conjectured: bool = False


class SearchConfig(BaseModel):
    """Knobs for the restart search."""
    restarts: int = Field(256, ge=1)
    max_iterations: int = Field(200, ge=1)
    tolerance: float = Field(1e-12, gt=0)
    rng_seed: int = Field(20240601, ge=0, lt=2 ** 64)
    max_workers: Optional[int] = Field(None, ge=1)

    @classmethod
    def from_settings(cls, **overrides) -> "SearchConfig":
        from spincodes.core.config import get_settings

        settings = get_settings()
        values = {
            'restarts': settings.restarts,
            'max_iterations': settings.max_iterations,
            'tolerance': settings.tolerance,
            'rng_seed': settings.rng_seed,
            'max_workers': settings.max_workers,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


class NotFoundReport(BaseModel):
    """What a failed search leaves behind."""
    rep: RepInfo
    d: int
    j: str
    mu: int
    nu: int
    best_residual: float
    restarts_used: int
    definite_forms: List[int] = Field(default_factory=list)


class CountReport(BaseModel):
    """Condition counts by summation and by closed form."""
    b: int
    a: int
    d: int
    nu_on: int
    nu_off: int
    nu: int
    nu_closed: int
    match: bool


class AtlasCell(BaseModel):
    """One predicted-length cell of the code atlas."""
    b: int
    a: int
    d: int
    n: int
    faithful: bool
    group_degree: int
    conjectured: bool
    group_minimum: bool = False


class LogicalGateReport(BaseModel):
    """Certified logical action of one physical transversal gate."""
    element: str
    logical: List[List[Tuple[float, float]]]  # (re, im) entries
    irrep_deviation: float
    leakage: float
    certified: bool


class GateCertificate(BaseModel):
    """Transversal group certificate for a code."""
    n: int
    rep: RepInfo
    gates: List[LogicalGateReport]
    group_order_checked: int = 0
    closure_deviation: float = 0.0
    certified: bool


class BranchingRow(BaseModel):
    """Multiplicities of every delta_a at one spin."""
    j: str
    multiplicities: List[int]
