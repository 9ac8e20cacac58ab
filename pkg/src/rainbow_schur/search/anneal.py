# src/rainbow_schur/search/anneal.py
"""Simulated annealing over single-position recolorings.

Every restart gets its own generator spawned from one SeedSequence, so a run is
reproducible from (seed, schedule) whatever the number of worker processes.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from contextlib import ExitStack

import numpy as np
from pydantic import BaseModel, Field

from rainbow_schur.config.settings import settings
from rainbow_schur.core.base import Coloring
from rainbow_schur.core.constructions import build_c0
from rainbow_schur.core.triples import classify, count_total_triples, rainbow_delta_array
from rainbow_schur.search.base import (
    ProgressCallback,
    SearchIntegrityError,
    SearchResult,
    canonical_string,
)

logger = logging.getLogger(__name__)


class AnnealSchedule(BaseModel):
    """Per-restart iteration count, restart count and initial temperature."""

    iters: int = Field(default_factory=lambda: settings.ANNEAL_ITERS, ge=1)
    restarts: int = Field(default_factory=lambda: settings.ANNEAL_RESTARTS, ge=1)
    temperature: float | None = Field(
        None, gt=0, description="Initial temperature; calibrated on warm-up moves when unset"
    )
    final_temperature: float = Field(
        default_factory=lambda: settings.ANNEAL_FINAL_TEMPERATURE, gt=0
    )


class AnnealSolver:
    """One annealing restart maximizing the rainbow count of a coloring of [n]."""

    def __init__(self, n: int, schedule: AnnealSchedule, rng: np.random.Generator, warm: bool):
        self.n = n
        self.schedule = schedule
        self.rng = rng
        self.padded = np.zeros(n + 1, dtype=np.int8)
        if warm:
            self.padded[1:] = build_c0(n).array
        else:
            self.padded[1:] = rng.integers(1, 4, size=n)
        self.score = classify(Coloring.from_sequence(self.padded[1:])).rainbow
        self.best_score = self.score
        self.best = self.padded[1:].copy()

    def _random_move(self) -> tuple[int, int]:
        position = int(self.rng.integers(1, self.n + 1))
        shift = int(self.rng.integers(1, 3))
        return position, (int(self.padded[position]) - 1 + shift) % 3 + 1

    def calibrate(self) -> float:
        """Temperature at which the mean worsening move is accepted with probability 1/2."""
        worsening = []
        for _ in range(settings.ANNEAL_WARMUP_MOVES):
            delta = rainbow_delta_array(self.padded, *self._random_move())
            if delta < 0:
                worsening.append(-delta)
        if not worsening:
            return 1.0
        return float(np.mean(worsening)) / math.log(2)

    def solve(self) -> tuple[int, str]:
        temperature = self.schedule.temperature or self.calibrate()
        final = min(self.schedule.final_temperature, temperature)
        cooling = (final / temperature) ** (1 / max(self.schedule.iters - 1, 1))

        for _ in range(self.schedule.iters):
            position, color = self._random_move()
            delta = rainbow_delta_array(self.padded, position, color)
            if delta >= 0 or self.rng.random() < math.exp(delta / temperature):
                self.padded[position] = color
                self.score += delta
                if self.score > self.best_score:
                    self.best_score = self.score
                    self.best = self.padded[1:].copy()
            temperature *= cooling

        return self.best_score, canonical_string(self.best.tolist())


def _restart(n: int, schedule: AnnealSchedule, seed: np.random.SeedSequence, warm: bool):
    return AnnealSolver(n, schedule, np.random.default_rng(seed), warm).solve()


def anneal_max(
    n: int,
    seed: int = 0,
    schedule: AnnealSchedule | None = None,
    threads: int = 1,
    on_progress: ProgressCallback | None = None,
) -> SearchResult:
    """Best coloring found over all restarts; restart 0 starts from c0(n)."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    schedule = schedule or AnnealSchedule()
    seeds = np.random.SeedSequence(seed).spawn(schedule.restarts)
    warm = [i == 0 for i in range(schedule.restarts)]
    logger.info(
        f"Annealing n={n}, seed={seed}: {schedule.restarts} restarts x {schedule.iters} moves"
    )

    count = len(seeds)
    outcomes = []
    with ExitStack() as stack:
        if threads > 1:
            pool = stack.enter_context(ProcessPoolExecutor(max_workers=threads))
            results = pool.map(_restart, [n] * count, [schedule] * count, seeds, warm)
        else:
            results = map(_restart, [n] * count, [schedule] * count, seeds, warm)
        for outcome in results:
            outcomes.append(outcome)
            if on_progress is not None:
                on_progress(len(outcomes), count)

    for i, (score, coloring) in enumerate(outcomes):
        logger.debug(f"restart {i}: {score} rainbow triples")

    # highest count first, then the lexicographically smallest coloring
    best_count, best = min(outcomes, key=lambda o: (-o[0], o[1]))
    verified = classify(Coloring.from_sequence([int(ch) for ch in best])).rainbow
    if verified != best_count:
        raise SearchIntegrityError(
            f"annealed coloring has {verified} rainbow triples, tracked {best_count}"
        )

    fraction = best_count / count_total_triples(n)
    notable = fraction > settings.CONJECTURE_CEILING
    if notable:
        logger.warning(
            f"n={n}: annealed rainbow fraction {fraction:.6f} exceeds {settings.CONJECTURE_CEILING}"
            f" with coloring {best}"
        )
    logger.info(f"Annealing n={n} done: best={best_count} ({fraction:.6f})")
    return SearchResult(
        n=n,
        best_count=best_count,
        optima=[best],
        seed=seed,
        iterations=schedule.iters * schedule.restarts,
        notable=notable,
    )
