from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache


class Settings(BaseSettings):
    """Application settings and configuration."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="SPINCODES_",
        case_sensitive=False,
        extra="ignore",  # Ignore extra fields in .env file
    )

    # App Info
    app_name: str = "Covariant Spin Code Engine"
    app_version: str = "1.0.0"
    log_level: str = "INFO"

    # Numerical thresholds
    tolerance: float = 1e-12  # minimization / KL threshold
    verify_tolerance: float = 1e-9  # independent re-check of numerically found codes
    product_tolerance: float = 1e-10  # spherical tensor product reconstruction

    # Search Settings
    restarts: int = 256
    max_iterations: int = 200
    rng_seed: int = 20240601
    escalate: int = 1  # extra lattice spins tried after a not-found
    conjectured_min_distance: int = 15  # atlas cells from here on are ▲

    # Processing Settings
    max_workers: int = 8  # thread pool for atlas cells, restarts, class checks

    # Resource guards
    dense_max_qubits: int = 14  # dense multiqubit KL check
    dicke_dense_max_qubits: int = 20  # dense Dicke vectors
    operator_max_qubits: int = 10  # dense 2^n x 2^n operators


@lru_cache()
def get_settings() -> Settings:
    """Cache settings instance."""
    return Settings()
