# src/rainbow_schur/core/triples.py
"""Exact counting of ordered Schur triples and their color classes.

Per-z counts come from convolving color-class indicator vectors: the number of
ordered pairs (x, z - x) with c(x) = a and c(z - x) = b is (1_a * 1_b)(z), so a
triple with largest element z is rainbow iff its two smaller parts carry the
two colors other than c(z). Nothing here materializes the triple list.
"""

import logging
from itertools import combinations_with_replacement
from typing import Iterator, Literal

import numpy as np

from rainbow_schur.config.settings import settings
from rainbow_schur.core.base import Coloring, SchurTriple, TripleStats

logger = logging.getLogger(__name__)

ConvolveMethod = Literal["auto", "direct", "fft"]

COLORS = (1, 2, 3)


def count_total_triples(n: int) -> int:
    """Number of ordered Schur triples in [n], i.e. C(n, 2)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return n * (n - 1) // 2


def enumerate_triples_with_max(n: int, z: int) -> Iterator[SchurTriple]:
    """Yield the z - 1 ordered triples (x, z - x, z), x increasing."""
    if not 1 <= z <= n:
        raise ValueError(f"z must lie in [1, {n}], got {z}")
    for x in range(1, z):
        yield SchurTriple(x=x, y=z - x, z=z)


def _pair_counts(colors: np.ndarray, method: ConvolveMethod) -> dict[tuple[int, int], np.ndarray]:
    """(1_a * 1_b)(z) for z = 0..n and every unordered color pair a <= b."""
    n = colors.size
    indicators = {}
    for color in COLORS:
        indicator = np.zeros(n + 1, dtype=np.int64)
        indicator[1:] = colors == color
        indicators[color] = indicator

    if method == "auto":
        method = "direct" if n <= settings.EXACT_CONVOLVE_LIMIT else "fft"

    pairs = list(combinations_with_replacement(COLORS, 2))
    if method == "direct":
        return {(a, b): np.convolve(indicators[a], indicators[b])[: n + 1] for a, b in pairs}

    size = 1 << int(2 * (n + 1) - 1).bit_length()
    spectra = {color: np.fft.rfft(indicators[color].astype(np.float64), size) for color in COLORS}
    counts = {}
    for a, b in pairs:
        raw = np.fft.irfft(spectra[a] * spectra[b], size)[: n + 1]
        counts[(a, b)] = np.rint(raw).astype(np.int64)
    return counts


def classify(coloring: Coloring, method: ConvolveMethod = "auto") -> TripleStats:
    """Exact rainbow / monochromatic / bichromatic counts with per-z profiles."""
    colors = coloring.array
    n = coloring.n
    pairs = _pair_counts(colors, method)

    r_profile = np.zeros(n, dtype=np.int64)
    mono_profile = np.zeros(n, dtype=np.int64)
    for color in COLORS:
        mask = colors == color
        a, b = (other for other in COLORS if other != color)
        r_profile[mask] = 2 * pairs[(a, b)][1:][mask]
        mono_profile[mask] = pairs[(color, color)][1:][mask]

    nr_profile = np.arange(n, dtype=np.int64) - r_profile
    total = count_total_triples(n)
    rainbow = int(r_profile.sum())
    mono = int(mono_profile.sum())
    logger.debug(f"classified n={n}: rainbow={rainbow}, mono={mono}, total={total}")

    return TripleStats(
        n=n,
        total=total,
        rainbow=rainbow,
        mono=mono,
        bichromatic=total - rainbow - mono,
        r_profile=r_profile,
        nr_profile=nr_profile,
        mono_profile=mono_profile,
    )


def naive_classify(coloring: Coloring) -> TripleStats:
    """Reference enumerator: walks every triple explicitly. Small n only."""
    n = coloring.n
    r_profile = np.zeros(n, dtype=np.int64)
    mono_profile = np.zeros(n, dtype=np.int64)
    for z in range(1, n + 1):
        for triple in enumerate_triples_with_max(n, z):
            seen = {coloring.color(v) for v in triple.as_tuple()}
            if len(seen) == 3:
                r_profile[z - 1] += 1
            elif len(seen) == 1:
                mono_profile[z - 1] += 1

    total = count_total_triples(n)
    rainbow = int(r_profile.sum())
    mono = int(mono_profile.sum())
    return TripleStats(
        n=n,
        total=total,
        rainbow=rainbow,
        mono=mono,
        bichromatic=total - rainbow - mono,
        r_profile=r_profile,
        nr_profile=np.arange(n, dtype=np.int64) - r_profile,
        mono_profile=mono_profile,
    )


def _rainbow_mask(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return (a != b) & (b != c) & (a != c)


def rainbow_delta_array(padded: np.ndarray, position: int, new_color: int) -> int:
    """Change in rainbow count when `position` is recolored.

    `padded` holds c(i) at index i (index 0 unused). Only the O(n) triples that
    contain `position` are visited; (p, p, 2p) is visited once.
    """
    n = padded.size - 1
    old_color = int(padded[position])
    if old_color == new_color:
        return 0

    p = position
    # p as the largest element
    xs = np.arange(1, p)
    first, second, third = [xs], [p - xs], [np.full(xs.size, p)]
    # p as the first summand, including (p, p, 2p)
    ys = np.arange(1, n - p + 1)
    first.append(np.full(ys.size, p))
    second.append(ys)
    third.append(p + ys)
    # p as the second summand, skipping (p, p, 2p)
    xs = np.arange(1, n - p + 1)
    xs = xs[xs != p]
    first.append(xs)
    second.append(np.full(xs.size, p))
    third.append(xs + p)

    idx = [np.concatenate(part) for part in (first, second, third)]
    before = _rainbow_mask(padded[idx[0]], padded[idx[1]], padded[idx[2]])

    recolored = padded.copy()
    recolored[p] = new_color
    after = _rainbow_mask(recolored[idx[0]], recolored[idx[1]], recolored[idx[2]])
    return int(after.sum()) - int(before.sum())


def rainbow_delta(coloring: Coloring, position: int, new_color: int) -> int:
    """rainbow(recolored) - rainbow(coloring), computed from the triples through `position`."""
    if not 1 <= position <= coloring.n:
        raise ValueError(f"position must lie in [1, {coloring.n}], got {position}")
    if new_color not in COLORS:
        raise ValueError(f"new_color must be one of {COLORS}, got {new_color}")
    padded = np.zeros(coloring.n + 1, dtype=np.int8)
    padded[1:] = coloring.array
    return rainbow_delta_array(padded, position, new_color)
