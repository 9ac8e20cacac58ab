# src/rainbow_schur/bounds/constants.py
"""High-precision constants of the upper-bound argument."""

import logging

import mpmath
from mpmath import mpf

from rainbow_schur.bounds.base import PrintedPoint, SimpleRoot
from rainbow_schur.config.settings import settings

logger = logging.getLogger(__name__)

# Printed closed form of the intersection point at gamma0
ALPHA_STAR_RADICAND = 603415190850401292856781740879567
ALPHA_STAR_DENOMINATOR = 366225273142527


def _cubic(alpha: mpf) -> mpf:
    return alpha**3 / 3 - alpha**2 / 2 + mpf(1) / 10


def simple_alpha_root(dps: int | None = None) -> SimpleRoot:
    """Root in [0, 1] of a^3/3 - a^2/2 + 1/10, closed form and Newton side by side."""
    with mpmath.workdps(dps or settings.MPMATH_DPS):
        closed_form = mpmath.sin(mpmath.pi / 6 - mpmath.atan(2 * mpmath.sqrt(6)) / 3) + mpf(1) / 2
        newton = mpmath.findroot(_cubic, mpf("0.5"), solver="newton")
        if not 0 <= newton <= 1:
            raise ArithmeticError(f"Newton iteration left [0, 1]: {newton}")
        residual = abs(_cubic(newton))
        return SimpleRoot(
            closed_form=+closed_form,
            newton=+newton,
            residual=+residual,
            coefficient=(1 - newton**2) / 2,
            fraction_bound=1 - newton**2,
        )


def eval_printed_alpha_star(
    gamma0: float | str | None = None, dps: int | None = None
) -> PrintedPoint:
    """Evaluate the printed alpha*, beta* = 1 - 2 gamma0 - alpha* and the objective there."""
    with mpmath.workdps(dps or settings.MPMATH_DPS):
        gamma = mpf(str(settings.GAMMA0 if gamma0 is None else gamma0))
        ratio = mpmath.sqrt(mpf(ALPHA_STAR_RADICAND)) / ALPHA_STAR_DENOMINATOR
        angle = -mpmath.atan(4 + ratio) / 3 + mpmath.pi / 6
        alpha = mpf(538551) / 1000000 - mpf(461449) / 500000 * mpmath.sin(angle)
        beta = 1 - 2 * gamma - alpha
        objective = mpf(1) / 2 - alpha**2 / 2 - beta * gamma

        discriminant = (alpha - 1) ** 2 + (2 / gamma) * (alpha**2 / 2 - alpha**3 / 3 - mpf(1) / 10)
        gap = None
        if discriminant >= 0:
            gap = (1 - alpha - mpmath.sqrt(discriminant)) - beta
            if abs(gap) > mpf("1e-6"):
                logger.warning(
                    f"printed point is off the lower beta2 curve by {mpmath.nstr(gap, 8)}"
                )

        return PrintedPoint(
            gamma0=gamma,
            alpha_star=+alpha,
            beta_star=+beta,
            objective=+objective,
            fraction=2 * objective,
            beta2_gap=gap,
        )
