from fractions import Fraction

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator


class KColoring(BaseModel):
    """A k-coloring of [n] with labels 1..k; colors[i - 1] is the color of i."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    k: int = Field(..., ge=2)
    colors: tuple[int, ...]

    _array: np.ndarray = PrivateAttr()

    @model_validator(mode="after")
    def _check_colors(self) -> "KColoring":
        if len(self.colors) != self.n:
            raise ValueError(f"expected {self.n} colors, got {len(self.colors)}")
        if self.colors and (min(self.colors) < 1 or max(self.colors) > self.k):
            raise ValueError(f"colors must lie in 1..{self.k}")
        return self

    def model_post_init(self, __context) -> None:
        array = np.asarray(self.colors, dtype=np.int16)
        array.setflags(write=False)
        self._array = array

    @property
    def array(self) -> np.ndarray:
        return self._array


class ApStats(BaseModel):
    """Rainbow k-AP statistics of one k-coloring."""

    n: int
    k: int
    total_aps: int
    rainbow_aps: int
    per_difference: dict[int, tuple[int, int]] = Field(
        ..., description="d -> (total, rainbow) for each common difference d"
    )
    cs_estimate: int = Field(..., description="Endpoint-pair upper estimate on rainbow_aps")

    @model_validator(mode="after")
    def _check_bounds(self) -> "ApStats":
        if not self.rainbow_aps <= self.cs_estimate:
            raise ValueError("rainbow count exceeds the endpoint-pair estimate")
        if not self.rainbow_aps <= self.total_aps:
            raise ValueError("rainbow count exceeds the total")
        return self

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.rainbow_aps, self.total_aps) if self.total_aps else Fraction(0)


class CsEstimate(BaseModel):
    """Endpoint-pair estimate and the analytic ceiling n^2 / (2k)."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    estimate: int
    ceiling: Fraction


class EquinumerousResult(BaseModel):
    """Exhaustive maximum of rainbow 3-APs over equinumerous 3-colorings of [3m]."""

    m: int
    max_count: int
    formula: int = Field(..., description="floor(3 m^2 / 2)")
    matches: bool
    optima: list[str] = Field(default_factory=list, description="Optima up to color permutation")
    colorings_visited: int
    complete: bool = Field(True, description="False when the node budget stopped the search")
