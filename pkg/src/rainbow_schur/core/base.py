from fractions import Fraction
from typing import Sequence

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PrivateAttr,
    field_serializer,
    field_validator,
    model_validator,
)


class Coloring(BaseModel):
    """A 3-coloring of [n]; colors[i - 1] is the color of the integer i."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Universe size")
    colors: tuple[int, ...] = Field(..., description="Color of 1..n, each in {1, 2, 3}")

    _array: np.ndarray = PrivateAttr()

    @field_validator("colors")
    @classmethod
    def _check_range(cls, colors: tuple[int, ...]) -> tuple[int, ...]:
        if colors and (min(colors) < 1 or max(colors) > 3):
            raise ValueError("colors must lie in {1, 2, 3}")
        return colors

    @model_validator(mode="after")
    def _check_length(self) -> "Coloring":
        if len(self.colors) != self.n:
            raise ValueError(f"expected {self.n} colors, got {len(self.colors)}")
        return self

    def model_post_init(self, __context) -> None:
        array = np.asarray(self.colors, dtype=np.int8)
        array.setflags(write=False)
        self._array = array

    @classmethod
    def from_sequence(cls, colors: Sequence[int] | np.ndarray) -> "Coloring":
        values = tuple(int(c) for c in colors)
        return cls(n=len(values), colors=values)

    @property
    def array(self) -> np.ndarray:
        """Read-only int8 view, 0-based (array[i - 1] == c(i))."""
        return self._array

    def color(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} outside [1, {self.n}]")
        return self.colors[i - 1]

    def as_string(self) -> str:
        return "".join(str(c) for c in self.colors)


class SchurTriple(BaseModel):
    """Ordered Schur triple (x, y, z) with x + y = z."""

    model_config = ConfigDict(frozen=True)

    x: int = Field(..., ge=1)
    y: int = Field(..., ge=1)
    z: int = Field(..., ge=2)

    @model_validator(mode="after")
    def _check_sum(self) -> "SchurTriple":
        if self.x + self.y != self.z:
            raise ValueError(f"{self.x} + {self.y} != {self.z}")
        return self

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


class TripleStats(BaseModel):
    """Exact Schur-triple counts of one coloring, with per-z profiles indexed z = 1..n."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    total: int
    rainbow: int
    mono: int
    bichromatic: int
    r_profile: np.ndarray = Field(..., description="r(z) for z = 1..n")
    nr_profile: np.ndarray = Field(..., description="nr(z) = z - 1 - r(z)")
    mono_profile: np.ndarray = Field(
        ..., description="monochromatic triples with largest element z"
    )

    @model_validator(mode="after")
    def _check_counts(self) -> "TripleStats":
        if self.total != self.n * (self.n - 1) // 2:
            raise ValueError("total must equal n(n-1)/2")
        if self.rainbow + self.mono + self.bichromatic != self.total:
            raise ValueError("rainbow + mono + bichromatic must equal total")
        return self

    @field_serializer("r_profile", "nr_profile", "mono_profile")
    def _serialize_profile(self, profile: np.ndarray) -> list[int]:
        return profile.tolist()

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.rainbow, self.total) if self.total else Fraction(0)

    def r(self, z: int) -> int:
        return int(self.r_profile[z - 1])

    def nr(self, z: int) -> int:
        return int(self.nr_profile[z - 1])
