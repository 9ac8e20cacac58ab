# src/rainbow_schur/search/checkpoint.py
import logging
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError, field_validator

logger = logging.getLogger(__name__)


class CheckpointError(Exception):
    """Checkpoint file is missing, unreadable or inconsistent."""


class Checkpoint(BaseModel):
    """Resumable state of an exhaustive search, written at task boundaries."""

    n: int = Field(..., ge=1)
    best_count: int = Field(..., ge=0)
    optima: list[str] = Field(default_factory=list)
    next_prefix: list[int] = Field(default_factory=list)
    nodes_visited: int = Field(0, ge=0)
    pruned: int = Field(0, ge=0)
    collect_all_optima: bool = False

    @field_validator("optima")
    @classmethod
    def _check_optima(cls, optima: list[str]) -> list[str]:
        if any(set(s) - set("123") for s in optima):
            raise ValueError("optima must be strings over '123'")
        return optima

    @field_validator("next_prefix")
    @classmethod
    def _check_prefix(cls, prefix: list[int]) -> list[int]:
        if any(c not in (1, 2, 3) for c in prefix):
            raise ValueError("next_prefix entries must lie in {1, 2, 3}")
        return prefix


def load_checkpoint(path: Path) -> Checkpoint:
    try:
        checkpoint = Checkpoint.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, ValidationError) as e:
        raise CheckpointError(f"Cannot load checkpoint {path}: {e}") from e
    if any(len(s) != checkpoint.n for s in checkpoint.optima):
        raise CheckpointError(f"Checkpoint {path}: optima length differs from n={checkpoint.n}")
    if len(checkpoint.next_prefix) > checkpoint.n:
        raise CheckpointError(f"Checkpoint {path}: next_prefix longer than n")
    logger.info(f"Loaded checkpoint {path} (n={checkpoint.n}, best={checkpoint.best_count})")
    return checkpoint


def save_checkpoint(path: Path, state: Checkpoint) -> None:
    """Write atomically through a sibling temp file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(state.model_dump_json(indent=2), encoding="utf-8")
    tmp.replace(path)
    logger.debug(f"Checkpoint written to {path} at {state.nodes_visited} nodes")
