# src/rainbow_schur/ap/equinumerous.py
import logging

from rainbow_schur.ap.base import EquinumerousResult
from rainbow_schur.ap.progressions import modular_rainbow_count

logger = logging.getLogger(__name__)


class _BudgetExceeded(Exception):
    pass


def equinumerous_ap3_max(m: int, node_budget: int | None = None) -> EquinumerousResult:
    """Maximum number of rainbow 3-APs over 3-colorings of [3m] with all classes of size m.

    Labels are assigned in first-use order, so each coloring is visited once up
    to color permutation. A 3-AP (z - 2d, z - d, z) is scored when z is colored.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    n = 3 * m
    formula = 3 * m * m // 2
    colors = [0] * (n + 1)
    sizes = [0, 0, 0, 0]
    # most 3-APs that can still be scored once positions 1..depth are colored
    rest = [0] * (n + 1)
    for depth in range(n - 1, -1, -1):
        rest[depth] = rest[depth + 1] + depth // 2

    best = modular_rainbow_count(n, 3)
    optima: list[str] = []
    visited = 0

    def gains(z: int) -> list[int]:
        out = [0, 0, 0, 0]
        for d in range(1, (z - 1) // 2 + 1):
            a, b = colors[z - 2 * d], colors[z - d]
            if a != b:
                out[6 - a - b] += 1
        return out

    def descend(z: int, total: int, used: int) -> None:
        nonlocal best, optima, visited
        visited += 1
        if node_budget is not None and visited > node_budget:
            raise _BudgetExceeded
        if z > n:
            coloring = "".join(map(str, colors[1:]))
            if total > best:
                best, optima = total, [coloring]
            elif total == best:
                optima.append(coloring)
            return
        step = gains(z)
        for c in range(1, min(3, used + 1) + 1):
            if sizes[c] == m or total + step[c] + rest[z] < best:
                continue
            colors[z] = c
            sizes[c] += 1
            descend(z + 1, total + step[c], max(used, c))
            sizes[c] -= 1
        colors[z] = 0

    complete = True
    try:
        descend(1, 0, 0)
    except _BudgetExceeded:
        complete = False
        logger.warning(f"equinumerous search m={m} stopped after {node_budget} nodes")

    matches = best == formula
    if complete and not matches:
        logger.warning(f"m={m}: exhaustive maximum {best} differs from floor(3m^2/2) = {formula}")
    logger.info(f"equinumerous m={m}: max {best} rainbow 3-APs, {len(optima)} optima")
    return EquinumerousResult(
        m=m,
        max_count=best,
        formula=formula,
        matches=matches,
        optima=sorted(optima),
        colorings_visited=visited,
        complete=complete,
    )
