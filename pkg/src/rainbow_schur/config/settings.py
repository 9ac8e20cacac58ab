from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(env_prefix="RAINBOW_", env_file=".env", extra="ignore")

    # Directory Configuration
    LOGS_DIR: Path = Path("./logs")
    LOG_LEVEL: str = "WARNING"
    LOG_FILE_MAX_BYTES: int = 10 * 1024 * 1024
    LOG_FILE_BACKUPS: int = 5

    # Counting
    EXACT_CONVOLVE_LIMIT: int = Field(
        default=4096,
        description="Largest n for which per-z pair counts use exact integer convolution",
    )

    # Bounds
    MPMATH_DPS: int = 50
    GAMMA0: float = 0.077102
    SOLVER_GRID_STEPS: int = 20000
    SOLVER_TOLERANCE: float = 1e-10
    MINMAX_GAMMA_LO: float = 0.02
    MINMAX_GAMMA_HI: float = 0.15
    MINMAX_STEPS: int = 60
    BALOGH_EPSILON: float = 0.02

    # Exhaustive search
    SEARCH_PREFIX_DEPTH: int = Field(
        default=6,
        description="Positions fixed per work unit; depth 6 gives 122 canonical prefixes",
    )
    SEARCH_CHECKPOINT_EVERY: int = 10_000_000
    SEARCH_OPTIMA_CAP: int = 1_000_000

    # Annealing
    ANNEAL_ITERS: int = 20000
    ANNEAL_RESTARTS: int = 4
    ANNEAL_WARMUP_MOVES: int = 1000
    ANNEAL_FINAL_TEMPERATURE: float = 0.05
    CONJECTURE_CEILING: float = 0.45


# Global settings instance
settings = Settings()
