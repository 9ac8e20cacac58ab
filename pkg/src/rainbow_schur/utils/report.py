# src/rainbow_schur/utils/report.py
import hashlib
import math
from fractions import Fraction
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as get_version
from typing import Any

import mpmath
import numpy as np
from pydantic import BaseModel, Field


class RunReport(BaseModel):
    """Self-describing record of one command run."""

    command: list[str] = Field(..., description="argv that reproduces the run")
    input_digest: str = Field(..., description="sha256 of the canonical input")
    elapsed_seconds: float
    results: dict[str, Any]
    tool_version: str


def tool_version() -> str:
    try:
        return get_version("rainbow_schur")
    except PackageNotFoundError:
        return "dev"


def digest(payload: str | bytes) -> str:
    data = payload.encode("utf-8") if isinstance(payload, str) else payload
    return hashlib.sha256(data).hexdigest()


def render_fraction(value: Fraction) -> dict[str, Any]:
    """Exact rational next to its decimal; only the exact form is meant for comparisons."""
    return {"exact": f"{value.numerator}/{value.denominator}", "decimal": float(value)}


def to_jsonable(value: Any) -> Any:
    """Recursively turn results into JSON-native values."""
    if isinstance(value, BaseModel):
        return to_jsonable(value.model_dump())
    if isinstance(value, Fraction):
        return render_fraction(value)
    if isinstance(value, mpmath.mpf):
        return mpmath.nstr(value, 30)
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    raise TypeError(f"Cannot serialize {type(value).__name__}")
