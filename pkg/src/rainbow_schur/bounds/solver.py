# src/rainbow_schur/bounds/solver.py
"""Continuous min-max over (gamma; alpha, beta) for the nuanced upper bound.

For fixed gamma the objective 1/2 - alpha^2/2 - beta gamma decreases in beta, so
each alpha is paired with the smallest feasible beta:

    beta_min(alpha) = max(0, beta2_lower(alpha), min(1 - 2 gamma - alpha, 1 - 3 gamma))

which is feasible iff beta_min <= min(1, beta2_upper(alpha)). The second term
encodes the cubic constraint, the third the disjunction (at least one of the two
linear inequalities). The resulting one-dimensional profile is scanned on a
grid and refined by golden-section search around the best grid point.
"""

import csv
import logging
import math
from pathlib import Path
from typing import Callable

import numpy as np

from rainbow_schur.bounds.base import (
    BetaCurves,
    Binding,
    BoundSolution,
    MinMaxResult,
    PrintedComparison,
    RegionRow,
)
from rainbow_schur.bounds.constants import eval_printed_alpha_star
from rainbow_schur.config.settings import settings

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2
ACTIVE_TOLERANCE = 1e-7
REGION_COLUMNS = (
    "gamma",
    "alpha",
    "beta1",
    "beta2_lower",
    "beta2_upper",
    "feasible_flag",
    "objective",
)


def _discriminant(alpha: np.ndarray, gamma: float) -> np.ndarray:
    return (alpha - 1) ** 2 + (2 / gamma) * (alpha**2 / 2 - alpha**3 / 3 - 0.1)


def beta_curves(alpha: float, gamma: float) -> BetaCurves:
    """beta1 = 1 - 2 gamma - alpha and the roots of the cubic constraint in beta."""
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if not 0 < gamma < 0.5:
        raise ValueError(f"gamma must lie in (0, 1/2), got {gamma}")

    discriminant = float(_discriminant(np.float64(alpha), gamma))
    curves = BetaCurves(
        alpha=alpha, gamma=gamma, beta1=1 - 2 * gamma - alpha, discriminant=discriminant
    )
    if discriminant >= 0:
        root = math.sqrt(discriminant)
        curves.beta2_lower = (1 - alpha) - root
        curves.beta2_upper = (1 - alpha) + root
    return curves


def _profile(
    alpha: np.ndarray, gamma: float, use_disjunction: bool
) -> tuple[np.ndarray, np.ndarray]:
    """Smallest feasible beta and the objective there; objective -inf where infeasible."""
    alpha = np.asarray(alpha, dtype=np.float64)
    disc = _discriminant(alpha, gamma)
    root = np.sqrt(np.clip(disc, 0, None))
    lower = (1 - alpha) - root
    upper = (1 - alpha) + root

    beta = np.maximum(0.0, lower)
    if use_disjunction:
        beta = np.maximum(beta, np.minimum(1 - 2 * gamma - alpha, 1 - 3 * gamma))

    feasible = (disc >= 0) & (beta <= np.minimum(1.0, upper))
    objective = np.where(feasible, 0.5 - alpha**2 / 2 - beta * gamma, -np.inf)
    return beta, objective


def _golden_max(func: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    """Golden-section search for the maximizer of a unimodal function on [lo, hi]."""
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc, fd = func(c), func(d)
    while hi - lo > tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = func(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = func(d)
    return (lo + hi) / 2


def _binding(alpha: float, beta: float, gamma: float, use_disjunction: bool) -> Binding:
    curves = beta_curves(min(max(alpha, 0.0), 1.0), gamma)
    first_gap = alpha + beta - (1 - 2 * gamma)
    return Binding(
        disjunct="first" if first_gap >= -ACTIVE_TOLERANCE else "second",
        first_active=use_disjunction and abs(first_gap) <= ACTIVE_TOLERANCE,
        second_active=use_disjunction and abs(beta - (1 - 3 * gamma)) <= ACTIVE_TOLERANCE,
        cubic_lower_active=curves.beta2_lower is not None
        and abs(beta - curves.beta2_lower) <= ACTIVE_TOLERANCE,
        cubic_upper_active=curves.beta2_upper is not None
        and abs(beta - curves.beta2_upper) <= ACTIVE_TOLERANCE,
        box_active=beta <= ACTIVE_TOLERANCE or alpha <= ACTIVE_TOLERANCE or alpha >= 1,
    )


def solve_fixed_gamma(
    gamma: float,
    resolution: int | None = None,
    use_disjunction: bool = True,
    tol: float | None = None,
) -> BoundSolution:
    """Maximize 1/2 - alpha^2/2 - beta gamma over the feasible (alpha, beta) region."""
    if not 0 < gamma < 1 / 3:
        raise ValueError(f"gamma must lie in (0, 1/3), got {gamma}")
    resolution = resolution or settings.SOLVER_GRID_STEPS
    tol = tol or settings.SOLVER_TOLERANCE

    grid = np.linspace(0.0, 1.0, resolution + 1)
    _, objective = _profile(grid, gamma, use_disjunction)
    if not np.isfinite(objective).any():
        logger.info(f"gamma={gamma}: empty feasible region")
        return BoundSolution(gamma=gamma, feasible=False, use_disjunction=use_disjunction)

    # argmax returns the first, i.e. smallest alpha, among equal grid optima
    best = int(np.argmax(objective))
    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, resolution)]

    def scalar(a: float) -> float:
        return float(_profile(np.array([a]), gamma, use_disjunction)[1][0])

    alpha = _golden_max(scalar, lo, hi, tol)
    if scalar(alpha) < objective[best]:
        alpha = float(grid[best])

    beta_arr, obj_arr = _profile(np.array([alpha]), gamma, use_disjunction)
    beta, value = float(beta_arr[0]), float(obj_arr[0])
    solution = BoundSolution(
        gamma=gamma,
        feasible=True,
        alpha_star=alpha,
        beta_star=beta,
        objective=value,
        fraction=2 * value,
        binding=_binding(alpha, beta, gamma, use_disjunction),
        use_disjunction=use_disjunction,
    )
    logger.debug(f"gamma={gamma}: alpha={alpha:.8f}, beta={beta:.8f}, fraction={2 * value:.8f}")
    return solution


def solve_minmax(
    gamma_lo: float | None = None,
    gamma_hi: float | None = None,
    steps: int | None = None,
    resolution: int | None = None,
    with_curve: bool = False,
) -> MinMaxResult:
    """Minimize the fixed-gamma maximum over gamma: grid scan, then golden-section refinement."""
    gamma_lo = settings.MINMAX_GAMMA_LO if gamma_lo is None else gamma_lo
    gamma_hi = settings.MINMAX_GAMMA_HI if gamma_hi is None else gamma_hi
    steps = steps or settings.MINMAX_STEPS
    if not 0 < gamma_lo < gamma_hi < 1 / 3:
        raise ValueError(f"need 0 < gamma_lo < gamma_hi < 1/3, got {gamma_lo}, {gamma_hi}")

    gammas = np.linspace(gamma_lo, gamma_hi, steps + 1)
    solutions = [solve_fixed_gamma(float(g), resolution) for g in gammas]
    values = np.array([s.fraction if s.feasible else np.inf for s in solutions])
    if not np.isfinite(values).any():
        raise ValueError(f"no feasible gamma in [{gamma_lo}, {gamma_hi}]")

    best = int(np.argmin(values))
    lo = float(gammas[max(best - 1, 0)])
    hi = float(gammas[min(best + 1, steps)])

    def negated(g: float) -> float:
        solution = solve_fixed_gamma(g, resolution)
        return -solution.fraction if solution.feasible else -np.inf

    gamma = _golden_max(negated, lo, hi, 1e-7)
    refined = solve_fixed_gamma(gamma, resolution)
    if not refined.feasible or refined.fraction > values[best]:
        refined = solutions[best]

    logger.info(f"min-max: gamma={refined.gamma:.6f}, fraction={refined.fraction:.6f}")
    curve = []
    if with_curve:
        curve = [(float(g), s.fraction) for g, s in zip(gammas, solutions)]
    return MinMaxResult(best=refined, curve=curve)


def region_rows(gamma: float, resolution: int = 1000) -> list[RegionRow]:
    """Per-alpha boundary data of the feasible region at one gamma."""
    grid = np.linspace(0.0, 1.0, resolution + 1)
    _, objective = _profile(grid, gamma, use_disjunction=True)
    rows = []
    for alpha, value in zip(grid, objective):
        curves = beta_curves(float(alpha), gamma)
        rows.append(
            RegionRow(
                gamma=gamma,
                alpha=float(alpha),
                beta1=curves.beta1,
                beta2_lower=curves.beta2_lower,
                beta2_upper=curves.beta2_upper,
                feasible_flag=bool(np.isfinite(value)),
                objective=float(value) if np.isfinite(value) else None,
            )
        )
    return rows


def _format(value: float | bool | None) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    return repr(float(value))


def write_region_csv(path: Path, rows: list[RegionRow]) -> None:
    """Write region rows as CSV with a header; '.' decimals, empty cells for undefined values."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(REGION_COLUMNS)
        for row in rows:
            writer.writerow([_format(getattr(row, column)) for column in REGION_COLUMNS])
    logger.info(f"Wrote {len(rows)} region rows to {path}")


def compare_printed_point(gamma0: float | None = None) -> PrintedComparison:
    """Printed closed-form point against the solver optimum at gamma0; nothing is reconciled."""
    gamma0 = settings.GAMMA0 if gamma0 is None else gamma0
    printed = eval_printed_alpha_star(gamma0)
    solution = solve_fixed_gamma(gamma0)
    gap = (solution.fraction - float(printed.fraction)) if solution.feasible else float("nan")
    if solution.feasible and abs(gap) > 1e-6:
        logger.warning(
            f"gamma0={gamma0}: solver fraction {solution.fraction:.6f} differs from the printed "
            f"point {float(printed.fraction):.6f} by {gap:+.6f}"
        )
    return PrintedComparison(printed=printed, solver=solution, fraction_gap=gap)
