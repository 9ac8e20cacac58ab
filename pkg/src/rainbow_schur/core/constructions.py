# src/rainbow_schur/core/constructions.py
import logging
from fractions import Fraction
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field, model_validator

from rainbow_schur.ap.base import KColoring
from rainbow_schur.core.base import Coloring
from rainbow_schur.core.triples import classify, count_total_triples

logger = logging.getLogger(__name__)


def build_c0(n: int) -> Coloring:
    """Interval-plus-parity coloring: odd i with 5i <= 2n -> 1, other odd -> 2, even -> 3."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    i = np.arange(1, n + 1)
    colors = np.where(i % 2 == 0, 3, np.where(5 * i <= 2 * n, 1, 2))
    return Coloring(n=n, colors=tuple(colors.tolist()))


def c0_rainbow_fraction(n: int) -> Fraction:
    """Exact rainbow fraction of c0 on [n]."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    stats = classify(build_c0(n))
    return Fraction(stats.rainbow, count_total_triples(n))


def build_modular(n: int, k: int) -> KColoring:
    """Residue coloring i -> (i mod k) + 1."""
    if n < 1 or k < 2:
        raise ValueError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    colors = np.arange(1, n + 1) % k + 1
    return KColoring(n=n, k=k, colors=tuple(colors.tolist()))


def build_interval(n: int, breakpoints: tuple[int, ...], colors: tuple[int, ...]) -> Coloring:
    """Block coloring: [1..b1] gets colors[0], [b1+1..b2] gets colors[1], and so on."""
    i = np.arange(1, n + 1)
    segment = np.searchsorted(np.asarray(breakpoints, dtype=np.int64), i, side="left")
    return Coloring.from_sequence(np.asarray(colors)[segment])


def build_constant(n: int, color: int) -> Coloring:
    return Coloring(n=n, colors=(color,) * n)


class ConstructionId(BaseModel):
    """A named coloring family, addressable from the command line."""

    tag: Literal["C0", "MODULAR", "INTERVAL", "CONSTANT"]
    k: int | None = Field(None, ge=2, description="Modulus for MODULAR")
    breakpoints: tuple[int, ...] = ()
    colors: tuple[int, ...] = ()
    color: int | None = Field(None, ge=1, le=3, description="Color for CONSTANT")

    @model_validator(mode="after")
    def _check_parameters(self) -> "ConstructionId":
        if self.tag == "MODULAR" and self.k is None:
            raise ValueError("MODULAR needs k")
        if self.tag == "CONSTANT" and self.color is None:
            raise ValueError("CONSTANT needs a color")
        if self.tag == "INTERVAL":
            if any(b >= c for b, c in zip(self.breakpoints, self.breakpoints[1:])):
                raise ValueError("breakpoints must be strictly increasing")
            if len(self.colors) != len(self.breakpoints) + 1:
                raise ValueError("INTERVAL needs one more color than breakpoints")
            if any(c not in (1, 2, 3) for c in self.colors):
                raise ValueError("INTERVAL colors must lie in {1, 2, 3}")
        return self

    def build(self, n: int) -> Coloring:
        """Materialize the 3-coloring of [n]; MODULAR is only a 3-coloring for k = 3."""
        match self.tag:
            case "C0":
                return build_c0(n)
            case "CONSTANT":
                return build_constant(n, self.color)
            case "INTERVAL":
                bps = self.breakpoints
                if bps and not (1 <= bps[0] and bps[-1] <= n):
                    raise ValueError(f"breakpoints must lie within [1, {n}]")
                return build_interval(n, self.breakpoints, self.colors)
            case "MODULAR":
                if self.k != 3:
                    raise ValueError("mod:k is a 3-coloring only for k = 3; use the ap command")
                return Coloring.from_sequence(build_modular(n, 3).colors)

    def build_k(self, n: int) -> KColoring:
        if self.tag != "MODULAR":
            raise ValueError(f"{self.tag} is not a k-coloring family")
        return build_modular(n, self.k)


def parse_construction(text: str) -> ConstructionId:
    """Parse `c0`, `mod:k`, `constant:c` or `interval:b1,b2/c1,c2,c3`."""
    name, _, params = text.strip().partition(":")
    name = name.lower()
    try:
        match name:
            case "c0":
                return ConstructionId(tag="C0")
            case "mod" | "modular":
                return ConstructionId(tag="MODULAR", k=int(params))
            case "constant":
                return ConstructionId(tag="CONSTANT", color=int(params))
            case "interval":
                bounds, _, colors = params.partition("/")
                return ConstructionId(
                    tag="INTERVAL",
                    breakpoints=tuple(int(b) for b in bounds.split(",") if b),
                    colors=tuple(int(c) for c in colors.split(",") if c),
                )
    except ValueError as e:
        raise ValueError(f"Invalid construction '{text}': {e}") from e
    raise ValueError(f"Unknown construction '{text}'")
