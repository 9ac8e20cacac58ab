from pydantic import BaseModel, ConfigDict, Field, model_validator


class CyclicColoring(BaseModel):
    """Coloring of the residues 0..n-1 of Z_n with 2 or 3 colors."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Modulus")
    colors: tuple[int, ...] = Field(..., description="Color of residue 0..n-1")
    num_colors: int = Field(3, ge=2, le=3)

    @model_validator(mode="after")
    def _check_colors(self) -> "CyclicColoring":
        if len(self.colors) != self.n:
            raise ValueError(f"expected {self.n} colors, got {len(self.colors)}")
        if any(not 1 <= c <= self.num_colors for c in self.colors):
            raise ValueError(f"colors must lie in 1..{self.num_colors}")
        return self

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(self.colors.count(c) for c in range(1, self.num_colors + 1))


class ZnCounts(BaseModel):
    """Counts over all ordered pairs (x, y) of Z_n with z = x + y mod n."""

    mono: int
    rainbow: int
    total: int


class IdentityCheck(BaseModel):
    """Both sides of an exact identity and the terms entering them."""

    identity: str
    holds: bool
    lhs: int
    rhs: int
    terms: dict[str, int] = Field(default_factory=dict)
