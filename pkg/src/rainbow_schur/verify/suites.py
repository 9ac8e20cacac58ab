# src/rainbow_schur/verify/suites.py
"""Property suites behind `verify --family`: exact identities checked on many inputs."""

import logging
from fractions import Fraction
from itertools import product
from typing import Any, Iterator

import numpy as np
from pydantic import ValidationError

from rainbow_schur.ap.base import KColoring
from rainbow_schur.ap.progressions import classify_aps, cs_upper_estimate
from rainbow_schur.bounds.reweigh import (
    check_reweigh,
    extract_cut_nuanced,
    extract_cut_simple,
    random_reweigh_instance,
)
from rainbow_schur.core.base import Coloring
from rainbow_schur.core.graphmap import count_rainbow_triangles
from rainbow_schur.core.triples import classify
from rainbow_schur.identities.base import CyclicColoring
from rainbow_schur.identities.cyclic import check_ccs, check_datskovsky
from rainbow_schur.identities.hypercube import naive_unordered_mono, rz_objective
from rainbow_schur.verify.base import BaseSuite, CaseOutcome, SuiteResult

logger = logging.getLogger(__name__)


def _random_coloring(rng: np.random.Generator, low: int, max_n: int) -> Coloring:
    n = int(rng.integers(low, max(low, max_n) + 1))
    return Coloring.from_sequence(rng.integers(1, 4, size=n))


class TriangleCardinalitySuite(BaseSuite):
    """Fiber-weighted rainbow count against the triangle-by-triangle scan."""

    family = "trcard"
    default_max_n = 60

    def cases(self, rng, trials, max_n, exhaustive) -> Iterator[Coloring]:
        if exhaustive:
            for n in range(1, min(max_n, 7) + 1):
                for colors in product((1, 2, 3), repeat=n):
                    yield Coloring.from_sequence(colors)
            return
        for _ in range(trials):
            yield _random_coloring(rng, 1, max_n)

    def check(self, case: Coloring) -> CaseOutcome:
        fiber = count_rainbow_triangles(case, method="fiber").rainbow_triangles
        scan = count_rainbow_triangles(case, method="scan").rainbow_triangles
        return CaseOutcome(
            passed=fiber == scan,
            witness={"coloring": case.as_string(), "fiber": fiber, "scan": scan},
        )


class ReweighSuite(BaseSuite):
    """Instances satisfying the four hypotheses must satisfy the conclusion."""

    family = "reweigh"
    default_trials = 10_000
    default_max_n = 12

    def cases(self, rng, trials, max_n, exhaustive) -> Iterator[Any]:
        for _ in range(trials):
            size = int(rng.integers(1, max(max_n, 1) + 1))
            yield random_reweigh_instance(rng, size=size)

    def check(self, case) -> CaseOutcome:
        result = check_reweigh(case)
        return CaseOutcome(
            passed=result.hypotheses_hold and result.conclusion_holds,
            witness={
                "f": [str(v) for v in case.f],
                "g": [str(v) for v in case.g],
                "s0": sorted(case.s0),
                "f0": {str(s): str(v) for s, v in sorted(case.f0.items())},
                "lhs": str(result.lhs),
                "rhs": str(result.rhs),
            },
        )


class CcsSuite(BaseSuite):
    """2 mono = 3 sum |class|^2 - n^2 + rainbow over 3-colorings of Z_n."""

    family = "ccs"

    def cases(self, rng, trials, max_n, exhaustive) -> Iterator[CyclicColoring]:
        if exhaustive:
            for n in range(1, min(max_n, 9) + 1):
                for colors in product((1, 2, 3), repeat=n):
                    yield CyclicColoring(n=n, colors=colors, num_colors=3)
            return
        for _ in range(trials):
            n = int(rng.integers(1, max_n + 1))
            colors = tuple(int(c) for c in rng.integers(1, 4, size=n))
            yield CyclicColoring(n=n, colors=colors, num_colors=3)

    def check(self, case: CyclicColoring) -> CaseOutcome:
        result = check_ccs(case)
        witness = {"colors": list(case.colors), **result.terms}
        return CaseOutcome(passed=result.holds, witness=witness)


class DatskovskySuite(BaseSuite):
    """mono * n = |R|^3 + |B|^3 over 2-colorings of Z_n."""

    family = "datskovsky"

    def cases(self, rng, trials, max_n, exhaustive) -> Iterator[CyclicColoring]:
        if exhaustive:
            for n in range(1, min(max_n, 12) + 1):
                for colors in product((1, 2), repeat=n):
                    yield CyclicColoring(n=n, colors=colors, num_colors=2)
            return
        for _ in range(trials):
            n = int(rng.integers(1, max_n + 1))
            colors = tuple(int(c) for c in rng.integers(1, 3, size=n))
            yield CyclicColoring(n=n, colors=colors, num_colors=2)

    def check(self, case: CyclicColoring) -> CaseOutcome:
        result = check_datskovsky(case)
        witness = {"colors": list(case.colors), **result.terms}
        return CaseOutcome(passed=result.holds, witness=witness)


class HypercubeSuite(BaseSuite):
    """The hypercube objective against a direct count of monochromatic triples."""

    family = "rzF"
    default_max_n = 20

    def cases(self, rng, trials, max_n, exhaustive) -> Iterator[tuple[int, ...]]:
        if exhaustive:
            for n in range(1, min(max_n, 12) + 1):
                yield from product((0, 1), repeat=n)
            return
        for _ in range(trials):
            n = int(rng.integers(1, max_n + 1))
            yield tuple(int(v) for v in rng.integers(0, 2, size=n))

    def check(self, case: tuple[int, ...]) -> CaseOutcome:
        fast, slow = rz_objective(case), naive_unordered_mono(case)
        return CaseOutcome(passed=fast == slow, witness={"x": list(case), "F": fast, "naive": slow})


class ProofCutSuite(BaseSuite):
    """Both cut ceilings, the per-color bound and the disjunction on random colorings."""

    family = "cuts"
    default_trials = 1000
    default_max_n = 300

    def cases(self, rng, trials, max_n, exhaustive) -> Iterator[tuple[Coloring, int]]:
        for _ in range(trials):
            coloring = _random_coloring(rng, 2, max_n)
            yield coloring, int(rng.integers(1, coloring.n + 1))

    def check(self, case: tuple[Coloring, int]) -> CaseOutcome:
        coloring, k0 = case
        stats = classify(coloring)
        witness = {"coloring": coloring.as_string(), "k0": k0, "rainbow": stats.rainbow}
        simple = extract_cut_simple(stats)
        witness["simple_ceiling"] = simple.rainbow_ceiling
        try:
            nuanced = extract_cut_nuanced(stats, k0, coloring)
        except AssertionError as e:
            witness["error"] = str(e)
            return CaseOutcome(passed=False, witness=witness)
        witness["nuanced_ceiling"] = nuanced.rainbow_ceiling
        passed = (
            stats.rainbow <= simple.rainbow_ceiling
            and stats.rainbow <= nuanced.rainbow_ceiling
            and nuanced.disjunction_holds()
        )
        return CaseOutcome(passed=passed, witness=witness)


class ApEstimateSuite(BaseSuite):
    """Rainbow k-APs against the endpoint-pair estimate and the (k-1)/k + 2k/n envelope."""

    family = "ap-cs"
    default_trials = 1000
    default_max_n = 500

    def cases(self, rng, trials, max_n, exhaustive) -> Iterator[KColoring]:
        for _ in range(trials):
            k = int(rng.integers(3, 6))
            n = int(rng.integers(k, max(k, max_n) + 1))
            colors = tuple(int(c) for c in rng.integers(1, k + 1, size=n))
            yield KColoring(n=n, k=k, colors=colors)

    def check(self, case: KColoring) -> CaseOutcome:
        witness = {"n": case.n, "k": case.k, "colors": list(case.colors)}
        estimate = cs_upper_estimate(case)
        witness["cs_estimate"] = estimate
        try:
            stats = classify_aps(case)
        except ValidationError as e:
            witness["error"] = str(e)
            return CaseOutcome(passed=False, witness=witness)
        witness["rainbow"] = stats.rainbow_aps
        envelope = Fraction(case.k - 1, case.k) + Fraction(2 * case.k, case.n)
        return CaseOutcome(
            passed=stats.rainbow_aps <= estimate and stats.fraction <= envelope,
            witness=witness,
        )


SUITES: dict[str, type[BaseSuite]] = {
    suite.family: suite
    for suite in (
        TriangleCardinalitySuite,
        ReweighSuite,
        CcsSuite,
        DatskovskySuite,
        HypercubeSuite,
        ProofCutSuite,
        ApEstimateSuite,
    )
}


def run_suite(
    family: str,
    trials: int | None = None,
    max_n: int | None = None,
    seed: int = 0,
    exhaustive: bool = False,
) -> SuiteResult:
    """Run one suite; the first failing case is kept as the witness."""
    if family not in SUITES:
        raise ValueError(f"Unknown family '{family}', expected one of {sorted(SUITES)}")
    suite = SUITES[family]()
    trials = suite.default_trials if trials is None else trials
    max_n = suite.default_max_n if max_n is None else max_n
    if trials < 0 or max_n < 1:
        raise ValueError(f"need trials >= 0 and max_n >= 1, got {trials}, {max_n}")

    rng = np.random.default_rng(seed)
    checked = failures = 0
    witness = None
    logger.info(f"Running suite {family} (trials={trials}, max_n={max_n}, seed={seed})")
    for case in suite.cases(rng, trials, max_n, exhaustive):
        outcome = suite.check(case)
        checked += 1
        if not outcome.passed:
            failures += 1
            if witness is None:
                witness = outcome.witness
                logger.error(f"{family}: failing case {witness}")

    logger.info(f"Suite {family}: {checked - failures}/{checked} passed")
    return SuiteResult(
        family=family,
        trials=checked,
        passed=failures == 0,
        failures=failures,
        seed=seed,
        exhaustive=exhaustive,
        witness=witness,
    )
