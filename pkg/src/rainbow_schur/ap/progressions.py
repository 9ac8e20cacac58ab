# src/rainbow_schur/ap/progressions.py
"""k-term arithmetic progressions in [n] and their rainbow counts.

A k-AP is the unordered tuple (x, x + d, ..., x + (k-1) d) with d >= 1, so a
fixed difference d contributes n - (k-1) d progressions.
"""

import logging
from fractions import Fraction
from math import gcd

import numpy as np
from sympy import factorint

from rainbow_schur.ap.base import ApStats, CsEstimate, KColoring

logger = logging.getLogger(__name__)


def _max_difference(n: int, k: int) -> int:
    return (n - 1) // (k - 1)


def count_aps(n: int, k: int) -> int:
    """Sum over d >= 1 with (k-1) d <= n-1 of n - (k-1) d, in closed form."""
    if n < 1 or k < 2:
        raise ValueError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    top = _max_difference(n, k)
    return n * top - (k - 1) * top * (top + 1) // 2


def modular_rainbow_count(n: int, k: int) -> int:
    """Rainbow k-APs of i -> (i mod k) + 1: exactly the differences coprime to k."""
    if n < 1 or k < 2:
        raise ValueError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    return sum(
        n - (k - 1) * d for d in range(1, _max_difference(n, k) + 1) if gcd(d, k) == 1
    )


def classify_aps(coloring: KColoring) -> ApStats:
    n, k = coloring.n, coloring.k
    colors = coloring.array
    per_difference = {}
    for d in range(1, _max_difference(n, k) + 1):
        length = n - (k - 1) * d
        # row j holds the j-th term of every AP with difference d
        terms = np.stack([colors[j * d : j * d + length] for j in range(k)])
        ordered = np.sort(terms, axis=0)
        rainbow = int(np.all(np.diff(ordered, axis=0) != 0, axis=0).sum())
        per_difference[d] = (length, rainbow)

    total = sum(t for t, _ in per_difference.values())
    rainbow = sum(r for _, r in per_difference.values())
    logger.debug(f"classified {total} {k}-APs in [{n}]: {rainbow} rainbow")
    return ApStats(
        n=n,
        k=k,
        total_aps=total,
        rainbow_aps=rainbow,
        per_difference=per_difference,
        cs_estimate=cs_upper_estimate(coloring),
    )


def totient_fraction(k: int) -> Fraction:
    """phi(k) / k as the product of (1 - 1/p) over the distinct primes p dividing k."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    fraction = Fraction(1)
    for p in factorint(k):
        fraction *= 1 - Fraction(1, int(p))
    return fraction


def _class_residue_counts(coloring: KColoring) -> np.ndarray:
    """counts[i - 1, r] = |{x : c(x) = i, x = r mod (k - 1)}|."""
    k = coloring.k
    residues = np.arange(1, coloring.n + 1) % (k - 1)
    counts = np.zeros((k, k - 1), dtype=np.int64)
    np.add.at(counts, (coloring.array - 1, residues), 1)
    return counts


def cs_upper_estimate(coloring: KColoring) -> int:
    """Pairs of differently colored integers in one residue class mod k - 1.

    The two endpoints of a rainbow k-AP form such a pair and determine the AP,
    so this bounds the rainbow count from above.
    """
    counts = _class_residue_counts(coloring)
    per_residue = counts.sum(axis=0)
    ordered_pairs = int((per_residue**2).sum() - (counts**2).sum())
    return ordered_pairs // 2


def cs_ceiling(n: int, k: int) -> Fraction:
    """The analytic ceiling n^2 / (2k) on the endpoint-pair estimate."""
    return Fraction(n * n, 2 * k)


def cs_report(coloring: KColoring) -> CsEstimate:
    return CsEstimate(
        estimate=cs_upper_estimate(coloring), ceiling=cs_ceiling(coloring.n, coloring.k)
    )
