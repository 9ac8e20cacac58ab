from math import comb
from typing import Callable, Sequence

from pydantic import BaseModel, Field, computed_field

from rainbow_schur.core.base import Coloring


# (finished units, total units); units are prefix tasks or annealing restarts
ProgressCallback = Callable[[int, int], None]


class SearchIntegrityError(RuntimeError):
    """A reported optimum does not reproduce its rainbow count."""


class SearchResult(BaseModel):
    """Outcome of an exhaustive or stochastic maximum-rainbow search."""

    n: int
    best_count: int
    optima: list[str] = Field(default_factory=list, description="Canonical coloring strings")
    nodes_visited: int = 0
    pruned: int = 0
    cursor: list[int] | None = Field(None, description="First unexplored prefix of a partial run")
    partial: bool = False
    truncated: bool = False
    seed: int | None = None
    iterations: int | None = None
    notable: bool = False

    @computed_field
    @property
    def fraction(self) -> float:
        total = comb(self.n, 2)
        return self.best_count / total if total else 0.0


def canonical_string(colors: Sequence[int]) -> str:
    """'123' string of a color sequence relabelled by first occurrence."""
    labels: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in labels:
            labels[c] = len(labels) + 1
        out.append(str(labels[c]))
    return "".join(out)


def canonicalize(coloring: Coloring) -> Coloring:
    """Representative of the coloring's class under the 6 color permutations."""
    canonical = canonical_string(coloring.colors)
    return Coloring(n=coloring.n, colors=tuple(int(c) for c in canonical))
