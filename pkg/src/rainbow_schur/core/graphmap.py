# src/rainbow_schur/core/graphmap.py
"""Schur triples as triangles of K_{n+1} under the difference-induced edge coloring."""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from rainbow_schur.config.settings import settings
from rainbow_schur.core.base import Coloring, SchurTriple, TripleStats
from rainbow_schur.core.triples import classify

logger = logging.getLogger(__name__)


class TriangleStats(BaseModel):
    """Rainbow triangle count of the induced coloring c'({u, v}) = c(|u - v|)."""

    n_vertices: int
    total_triangles: int
    rainbow_triangles: int

    @model_validator(mode="after")
    def _check_total(self) -> "TriangleStats":
        if self.total_triangles != comb(self.n_vertices, 3):
            raise ValueError("total_triangles must equal C(n + 1, 3)")
        return self


class BaloghGap(BaseModel):
    """Rainbow triangle density against the asymptotic 2/5 ceiling."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ratio: Fraction
    ceiling: Fraction = Fraction(2, 5)
    epsilon: float
    exceeds: bool


def total_triangles(n: int) -> int:
    return comb(n + 1, 3)


def induced_edge_color(base: Coloring, u: int, v: int) -> int:
    """c' on the edge {u, v} of K_{n+1}."""
    if u == v or not (1 <= u <= base.n + 1 and 1 <= v <= base.n + 1):
        raise ValueError(f"({u}, {v}) is not an edge of K_{base.n + 1}")
    return base.color(abs(u - v))


def map_triangle(v1: int, v2: int, v3: int) -> SchurTriple:
    """The consecutive-difference map f(v1, v2, v3) = (v2 - v1, v3 - v2, v3 - v1)."""
    if not 1 <= v1 < v2 < v3:
        raise ValueError(f"vertices must satisfy 1 <= v1 < v2 < v3, got ({v1}, {v2}, {v3})")
    return SchurTriple(x=v2 - v1, y=v3 - v2, z=v3 - v1)


def fiber_size(n: int, triple: SchurTriple) -> int:
    """Number of triangles of K_{n+1} mapping onto `triple`."""
    if triple.z > n:
        raise ValueError(f"triple {triple.as_tuple()} does not live in [{n}]")
    return n + 1 - triple.z


def _scan_rows(colors: np.ndarray, start: int, stop: int) -> int:
    """Rainbow triangles with smallest vertex in [start, stop), 0-based vertices."""
    m = colors.size + 1
    # edge[u, v] = c(|u - v|) on vertices 0..n; diagonal unused
    diff = np.abs(np.subtract.outer(np.arange(m), np.arange(m)))
    padded = np.concatenate(([0], colors))
    edge = padded[diff]

    count = 0
    for v1 in range(start, stop):
        first = edge[v1, v1 + 1 :]
        block = edge[v1 + 1 :, v1 + 1 :]
        rainbow = (
            (first[:, None] != first[None, :])
            & (first[:, None] != block)
            & (first[None, :] != block)
        )
        count += int(np.triu(rainbow, k=1).sum())
    return count


def _scan(base: Coloring, workers: int) -> int:
    m = base.n + 1
    colors = np.asarray(base.array, dtype=np.int8)
    if workers <= 1:
        return _scan_rows(colors, 0, m)

    bounds = np.linspace(0, m, workers + 1).astype(int)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_scan_rows, colors, int(lo), int(hi))
            for lo, hi in zip(bounds, bounds[1:])
        ]
        return sum(f.result() for f in futures)


def fiber_weighted_rainbow(stats: TripleStats) -> int:
    """Sum of r(z) * (n + 1 - z) over z."""
    n = stats.n
    weights = n + 1 - np.arange(1, n + 1, dtype=np.int64)
    return int(np.dot(stats.r_profile, weights))


def count_rainbow_triangles(
    base: Coloring,
    method: Literal["fiber", "scan"] = "fiber",
    workers: int = 1,
) -> TriangleStats:
    """Rainbow triangles of K_{n+1}; `scan` walks every triangle, `fiber` reuses r(z)."""
    if method == "scan":
        rainbow = _scan(base, workers)
    else:
        rainbow = fiber_weighted_rainbow(classify(base))
    logger.debug(f"rainbow triangles ({method}) for n={base.n}: {rainbow}")
    return TriangleStats(
        n_vertices=base.n + 1,
        total_triangles=total_triangles(base.n),
        rainbow_triangles=rainbow,
    )


def balogh_gap(base: Coloring, epsilon: float | None = None) -> BaloghGap:
    """Rainbow triangle density of c', compared against 2/5 + epsilon."""
    if base.n < 3:
        raise ValueError(f"n must be at least 3, got {base.n}")
    epsilon = settings.BALOGH_EPSILON if epsilon is None else epsilon
    stats = count_rainbow_triangles(base)
    ratio = Fraction(stats.rainbow_triangles, stats.total_triangles)
    exceeds = float(ratio) > 0.4 + epsilon
    if exceeds:
        logger.warning(f"rainbow triangle density {float(ratio):.6f} exceeds 2/5 + {epsilon}")
    return BaloghGap(ratio=ratio, epsilon=epsilon, exceeds=exceeds)
