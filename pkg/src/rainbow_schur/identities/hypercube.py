# src/rainbow_schur/identities/hypercube.py
import logging
from typing import Sequence

import numpy as np

from rainbow_schur.core.base import Coloring

logger = logging.getLogger(__name__)


def _check_binary(x: Sequence[int]) -> np.ndarray:
    values = np.asarray(x, dtype=np.int64)
    if values.ndim != 1 or np.any((values != 0) & (values != 1)):
        raise ValueError("x must be a sequence over {0, 1}")
    return values


def rz_objective(x: Sequence[int]) -> int:
    """F(x) = sum over i < j, i + j <= n of x_i x_j x_{i+j} + (1 - x_i)(1 - x_j)(1 - x_{i+j})."""
    values = _check_binary(x)
    n = values.size
    padded = np.concatenate(([0], values))
    total = 0
    for i in range(1, n // 2 + 1):
        j = np.arange(i + 1, n - i + 1)
        xi, xj, xs = padded[i], padded[j], padded[i + j]
        total += int((xi * xj * xs + (1 - xi) * (1 - xj) * (1 - xs)).sum())
    return total


def naive_unordered_mono(x: Sequence[int]) -> int:
    """Monochromatic triples {i, j, i + j} with i < j, counted one by one."""
    values = [int(v) for v in _check_binary(x)]
    n = len(values)
    count = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1 - i):
            if values[i - 1] == values[j - 1] == values[i + j - 1]:
                count += 1
    return count


def binary_from_coloring(coloring: Coloring) -> tuple[int, ...]:
    """A coloring using at most two colors as a point of {0, 1}^n; c(1) maps to 1."""
    used = set(coloring.colors)
    if len(used) > 2:
        raise ValueError(f"coloring uses {len(used)} colors, expected at most 2")
    first = coloring.colors[0]
    return tuple(int(c == first) for c in coloring.colors)
