# src/rainbow_schur/identities/cyclic.py
"""Closed-form monochromatic counts for colorings of Z_n.

Pairs are ordered and x = y is allowed, so every coloring of Z_n has exactly
n^2 triples (x, y, x + y).
"""

import logging

import numpy as np

from rainbow_schur.identities.base import CyclicColoring, IdentityCheck, ZnCounts

logger = logging.getLogger(__name__)


def count_zn_triples(coloring: CyclicColoring) -> ZnCounts:
    n = coloring.n
    colors = np.asarray(coloring.colors, dtype=np.int8)
    residues = np.arange(n)
    cx = colors[residues][:, None]
    cy = colors[residues][None, :]
    cz = colors[np.add.outer(residues, residues) % n]

    mono = int(((cx == cy) & (cy == cz)).sum())
    rainbow = 0
    if coloring.num_colors == 3:
        rainbow = int(((cx != cy) & (cy != cz) & (cx != cz)).sum())
    return ZnCounts(mono=mono, rainbow=rainbow, total=n * n)


def check_datskovsky(coloring: CyclicColoring) -> IdentityCheck:
    """mono * n == |R|^3 + |B|^3 for a 2-coloring of Z_n."""
    if coloring.num_colors != 2:
        raise ValueError(f"expected a 2-coloring, got {coloring.num_colors} colors")
    red, blue = coloring.class_sizes()
    counts = count_zn_triples(coloring)
    lhs = counts.mono * coloring.n
    rhs = red**3 + blue**3
    if lhs != rhs:
        logger.error(f"two-color identity fails on {coloring.colors}: {lhs} != {rhs}")
    return IdentityCheck(
        identity="datskovsky",
        holds=lhs == rhs,
        lhs=lhs,
        rhs=rhs,
        terms={"n": coloring.n, "mono": counts.mono, "R": red, "B": blue},
    )


def check_ccs(coloring: CyclicColoring) -> IdentityCheck:
    """2 mono == 3(|R|^2 + |G|^2 + |B|^2) - n^2 + rainbow for a 3-coloring of Z_n."""
    if coloring.num_colors != 3:
        raise ValueError(f"expected a 3-coloring, got {coloring.num_colors} colors")
    red, green, blue = coloring.class_sizes()
    counts = count_zn_triples(coloring)
    lhs = 2 * counts.mono
    rhs = 3 * (red**2 + green**2 + blue**2) - coloring.n**2 + counts.rainbow
    if lhs != rhs:
        logger.error(f"three-color identity fails on {coloring.colors}: {lhs} != {rhs}")
    return IdentityCheck(
        identity="ccs",
        holds=lhs == rhs,
        lhs=lhs,
        rhs=rhs,
        terms={
            "n": coloring.n,
            "mono": counts.mono,
            "rainbow": counts.rainbow,
            "R": red,
            "G": green,
            "B": blue,
        },
    )
