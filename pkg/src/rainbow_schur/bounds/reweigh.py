# src/rainbow_schur/bounds/reweigh.py
"""The reweighing lemma as an exact check, and the (z0, k0, Z) cuts built on it."""

import logging
from fractions import Fraction

import numpy as np

from rainbow_schur.bounds.base import ProofCut, ReweighCheck, ReweighInstance
from rainbow_schur.core.base import Coloring, TripleStats

logger = logging.getLogger(__name__)


def check_reweigh(instance: ReweighInstance) -> ReweighCheck:
    """Evaluate hypotheses (i)-(iv) and the conclusion; empty min/max use +/- infinity."""
    outside = [s for s in range(instance.size) if s not in instance.s0]
    g_in = [instance.g[s] for s in instance.s0]
    g_out = [instance.g[s] for s in outside]

    positive_outside = all(g > 0 for g in g_out)
    separated = not g_in or not g_out or max(g_in) <= min(g_out)
    dominated = all(instance.f[s] <= instance.f0[s] for s in instance.s0)
    weighted = sum((instance.f0[s] * instance.g[s] for s in instance.s0), Fraction(0)) >= sum(
        (f * g for f, g in zip(instance.f, instance.g)), Fraction(0)
    )

    lhs = sum(instance.f, Fraction(0))
    rhs = sum(instance.f0.values(), Fraction(0))
    check = ReweighCheck(
        positive_outside=positive_outside,
        separated=separated,
        dominated=dominated,
        weighted=weighted,
        conclusion_holds=lhs <= rhs,
        lhs=lhs,
        rhs=rhs,
    )
    if check.hypotheses_hold and not check.conclusion_holds:
        logger.error(f"reweighing conclusion failed on a valid instance: {instance}")
    return check


def random_reweigh_instance(
    rng: np.random.Generator,
    size: int | None = None,
    enforce: bool = True,
    max_value: int = 20,
) -> ReweighInstance:
    """Random integer instance; with `enforce` the hypotheses hold by construction.

    S0 is a set of elements carrying the smallest weights, f0 dominates f on S0
    and is then raised on the heaviest S0 element until (iv) holds.
    """
    size = int(rng.integers(1, 12)) if size is None else size
    g = sorted(int(v) for v in rng.integers(0, max_value + 1, size))
    f = [Fraction(int(v)) for v in rng.integers(0, max_value + 1, size)]
    cut = int(rng.integers(0, size + 1))

    if not enforce:
        s0 = frozenset(int(s) for s in rng.choice(size, cut, replace=False))
        f0 = {s: Fraction(int(rng.integers(0, max_value + 1))) for s in s0}
        return ReweighInstance(f=tuple(f), g=tuple(Fraction(v) for v in g), s0=s0, f0=f0)

    s0 = frozenset(range(cut))
    # (i): weights outside S0 strictly positive, still at least max g on S0
    floor = max([g[s] for s in s0], default=0)
    for s in range(cut, size):
        g[s] = max(g[s], floor, 1)

    if not s0:
        f = [Fraction(0)] * size
    f0 = {s: f[s] + int(rng.integers(0, 3)) for s in s0}

    if s0:
        heaviest = max(s0, key=lambda s: (g[s], s))
        if g[heaviest] == 0:
            # S0 carries no weight, so (iv) forces f = 0 outside S0
            for s in range(cut, size):
                f[s] = Fraction(0)
        else:
            need = sum(f[s] * g[s] for s in range(size)) - sum(f0[s] * g[s] for s in s0)
            if need > 0:
                f0[heaviest] += Fraction(need, g[heaviest])

    return ReweighInstance(f=tuple(f), g=tuple(Fraction(v) for v in g), s0=s0, f0=f0)


def _weights(n: int) -> np.ndarray:
    """g(z) = n + 1 - z for z = 1..n."""
    return n + 1 - np.arange(1, n + 1, dtype=np.int64)


def _largest_admissible(suffix: np.ndarray, target: int) -> int:
    """Largest z0 (1-based) with suffix[z0 - 1] >= target; suffix is nonincreasing."""
    admissible = np.flatnonzero(suffix >= target)
    return int(admissible[-1]) + 1


def _suffix_sums(terms: np.ndarray) -> np.ndarray:
    return np.cumsum(terms[::-1])[::-1]


def _witness_sets(
    coloring: Coloring, z0: int, z_set: set[int]
) -> tuple[dict[int, tuple[int, ...]], dict[int, tuple[int, ...]], dict[int, int | None]]:
    c_sets, c_prime_sets, z_max = {}, {}, {}
    for color in (1, 2, 3):
        members = np.flatnonzero(coloring.array == color) + 1
        c_prime_sets[color] = tuple(int(z) for z in members if z < z0)
        c_sets[color] = tuple(int(z) for z in members if z >= z0 and int(z) not in z_set)
        z_max[color] = c_sets[color][-1] if c_sets[color] else None
    return c_sets, c_prime_sets, z_max


def extract_cut_simple(stats: TripleStats, coloring: Coloring | None = None) -> ProofCut:
    """Maximal z0 with sum r(z)(n+1-z) <= sum_{z >= z0} (z-1)(n+1-z); k0 = 0, Z empty."""
    n = stats.n
    weights = _weights(n)
    weighted_rainbow = int(np.dot(stats.r_profile, weights))
    capacity = np.arange(n, dtype=np.int64) * weights
    z0 = _largest_admissible(_suffix_sums(capacity), weighted_rainbow)
    ceiling = int(np.arange(z0 - 1, n, dtype=np.int64).sum())

    c_sets, c_prime_sets, z_max = ({}, {}, {})
    if coloring is not None:
        c_sets, c_prime_sets, z_max = _witness_sets(coloring, z0, set())

    return ProofCut(
        n=n,
        z0=z0,
        k0=0,
        weighted_rainbow=weighted_rainbow,
        rainbow_ceiling=ceiling,
        alpha=Fraction(z0, n),
        beta=Fraction(0),
        gamma=Fraction(0),
        c_sets=c_sets,
        c_prime_sets=c_prime_sets,
        z_max=z_max,
    )


def extract_cut_nuanced(stats: TripleStats, k0: int, coloring: Coloring | None = None) -> ProofCut:
    """Maximal z0 with sum r(z)(n+1-z) <= sum_{z >= z0} (z-1)(n+1-z) - k0 sum_{z in Z} (n+1-z).

    Z(z0) = {z >= z0 : nr(z) >= k0}. Each suffix term (n+1-z)(z-1-k0[nr(z) >= k0])
    is nonnegative, so the right side is nonincreasing in z0 and one backward
    cumulative sum finds the maximal z0.
    """
    n = stats.n
    if not 1 <= k0 <= n:
        raise ValueError(f"k0 must lie in [1, {n}], got {k0}")

    weights = _weights(n)
    weighted_rainbow = int(np.dot(stats.r_profile, weights))
    heavy = stats.nr_profile >= k0
    majorant = np.arange(n, dtype=np.int64) - k0 * heavy
    z0 = _largest_admissible(_suffix_sums(majorant * weights), weighted_rainbow)

    z_values = np.arange(1, n + 1)
    Z = tuple(int(z) for z in z_values[(z_values >= z0) & heavy])
    ceiling = int(np.arange(z0 - 1, n, dtype=np.int64).sum()) - k0 * len(Z)

    c_sets, c_prime_sets, z_max = ({}, {}, {})
    if coloring is not None:
        c_sets, c_prime_sets, z_max = _witness_sets(coloring, z0, set(Z))
        for color, top in z_max.items():
            if top is not None and len(c_prime_sets[color]) + len(c_sets[color]) > k0:
                raise AssertionError(
                    f"color {color}: |C'| + |C| = "
                    f"{len(c_prime_sets[color]) + len(c_sets[color])} exceeds k0 = {k0}"
                )

    cut = ProofCut(
        n=n,
        z0=z0,
        k0=k0,
        Z=Z,
        weighted_rainbow=weighted_rainbow,
        rainbow_ceiling=ceiling,
        alpha=Fraction(z0, n),
        beta=Fraction(len(Z), n),
        gamma=Fraction(k0, n),
        c_sets=c_sets,
        c_prime_sets=c_prime_sets,
        z_max=z_max,
    )
    if stats.rainbow > ceiling:
        raise AssertionError(f"rainbow count {stats.rainbow} exceeds the cut ceiling {ceiling}")
    logger.debug(f"nuanced cut n={n}, k0={k0}: z0={z0}, |Z|={len(Z)}, ceiling={ceiling}")
    return cut
