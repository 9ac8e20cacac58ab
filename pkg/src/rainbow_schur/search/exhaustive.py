# src/rainbow_schur/search/exhaustive.py
"""Exact maximum of the rainbow Schur-triple count by branch and bound.

Only restricted-growth colorings are enumerated (position 1 gets label 1 and
every later position uses at most one label beyond those already seen), which
picks one representative per class of the 6 color permutations. Positions are
colored in increasing order and a triple is scored when its largest element is
colored. The search space is split into tasks by the canonical prefix of the
first SEARCH_PREFIX_DEPTH positions; each task runs from the same incumbent and
tasks are merged in prefix order, so the result does not depend on the number
of workers.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path
from typing import Iterator

from rainbow_schur.config.settings import settings
from rainbow_schur.core.base import Coloring
from rainbow_schur.core.constructions import build_c0
from rainbow_schur.core.triples import classify
from rainbow_schur.search.base import (
    ProgressCallback,
    SearchIntegrityError,
    SearchResult,
    canonical_string,
)
from rainbow_schur.search.checkpoint import Checkpoint, save_checkpoint

logger = logging.getLogger(__name__)


@dataclass
class TaskOutcome:
    prefix: tuple[int, ...]
    best_count: int = -1
    optima: list[str] = field(default_factory=list)
    nodes: int = 0
    pruned: int = 0
    truncated: bool = False


def canonical_prefixes(depth: int) -> Iterator[tuple[int, ...]]:
    """Restricted-growth prefixes of the given length, in lexicographic order."""

    def extend(prefix: tuple[int, ...], used: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == depth:
            yield prefix
            return
        for c in range(1, min(3, used + 1) + 1):
            yield from extend(prefix + (c,), max(used, c))

    if depth == 0:
        yield ()
        return
    yield from extend((1,), 1)


def _remaining_capacity(n: int) -> list[int]:
    """rest[d] = most rainbow triples with largest element in d+1..n; (x, x, 2x) excluded."""
    per_z = [0] + [2 * ((z - 1) // 2) for z in range(1, n + 1)]
    rest = [0] * (n + 1)
    for d in range(n - 1, -1, -1):
        rest[d] = rest[d + 1] + per_z[d + 1]
    return rest


def _gains(colors: list[int], z: int) -> list[int]:
    """gains[c] = rainbow triples with largest element z if z gets color c."""
    gains = [0, 0, 0, 0]
    for x in range(1, (z - 1) // 2 + 1):
        a, b = colors[x], colors[z - x]
        if a != b:
            gains[6 - a - b] += 2
    return gains


def explore_prefix(
    n: int,
    prefix: tuple[int, ...],
    floor: int,
    collect_all_optima: bool,
    prune: bool,
    cap: int,
) -> TaskOutcome:
    """Search every completion of `prefix` for colorings with at least `floor` rainbow triples.

    Without `collect_all_optima` only colorings strictly above `floor - 1` are kept
    and the first (lexicographically smallest) one of maximal count wins.
    """
    outcome = TaskOutcome(prefix=prefix)
    colors = [0] * (n + 1)
    count = 0
    for z, c in enumerate(prefix, start=1):
        colors[z] = c
        count += _gains(colors, z)[c]

    rest = _remaining_capacity(n)
    best = floor if collect_all_optima else floor - 1

    def leaf(total: int) -> None:
        nonlocal best
        if total > best or (collect_all_optima and total == best and not outcome.optima):
            best = total
            outcome.optima = ["".join(map(str, colors[1:]))]
        elif collect_all_optima and total == best:
            if len(outcome.optima) < cap:
                outcome.optima.append("".join(map(str, colors[1:])))
            else:
                outcome.truncated = True

    def descend(z: int, total: int, used: int) -> None:
        if z > n:
            leaf(total)
            return
        gains = _gains(colors, z)
        for c in range(1, min(3, used + 1) + 1):
            outcome.nodes += 1
            child = total + gains[c]
            if prune:
                bound = child + rest[z]
                if bound < best or (bound == best and not collect_all_optima):
                    outcome.pruned += 1
                    continue
            colors[z] = c
            descend(z + 1, child, max(used, c))
        colors[z] = 0

    outcome.nodes += 1
    descend(len(prefix) + 1, count, max(prefix, default=0))
    if outcome.optima:
        outcome.best_count = best
    return outcome


class ExhaustiveSearch:
    """Drives the prefix tasks, merges their outcomes and keeps the checkpoint current."""

    def __init__(
        self,
        n: int,
        collect_all_optima: bool = False,
        threads: int = 1,
        checkpoint: Path | None = None,
        prune: bool = True,
        node_budget: int | None = None,
        resume: Checkpoint | None = None,
        on_progress: ProgressCallback | None = None,
    ):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        if threads < 1:
            raise ValueError(f"threads must be positive, got {threads}")
        if resume is not None:
            if resume.n != n:
                raise ValueError(f"checkpoint is for n={resume.n}, not n={n}")
            if resume.collect_all_optima != collect_all_optima:
                raise ValueError("checkpoint was written with a different collect_all_optima")

        self.n = n
        self.collect_all_optima = collect_all_optima
        self.threads = threads
        self.checkpoint = checkpoint
        self.prune = prune
        self.node_budget = node_budget
        self.on_progress = on_progress
        self.cap = settings.SEARCH_OPTIMA_CAP

        self.depth = min(n, settings.SEARCH_PREFIX_DEPTH)
        self.best_count = -1
        self.optima: list[str] = []
        self.nodes = 0
        self.pruned = 0
        self.truncated = False
        self.start_prefix: tuple[int, ...] | None = None
        self.finished = False

        # c0 is a feasible coloring, so its count is a valid starting incumbent
        self.incumbent = build_c0(n)
        self.incumbent_count = classify(self.incumbent).rainbow
        self.floor = self.incumbent_count
        if resume is not None:
            self.best_count = resume.best_count if resume.optima else -1
            self.optima = list(resume.optima)
            self.nodes = resume.nodes_visited
            self.pruned = resume.pruned
            self.floor = max(self.floor, resume.best_count)
            self.finished = not resume.next_prefix
            if resume.next_prefix:
                self.depth = len(resume.next_prefix)
                self.start_prefix = tuple(resume.next_prefix)

    def _tasks(self) -> list[tuple[int, ...]]:
        if self.finished:
            return []
        tasks = list(canonical_prefixes(self.depth))
        if self.start_prefix is not None:
            tasks = [t for t in tasks if t >= self.start_prefix]
        return tasks

    def _merge(self, outcome: TaskOutcome) -> None:
        self.nodes += outcome.nodes
        self.pruned += outcome.pruned
        if not outcome.optima:
            return
        if outcome.best_count > self.best_count:
            self.best_count = outcome.best_count
            self.optima = list(outcome.optima)
            self.truncated = outcome.truncated
        elif outcome.best_count == self.best_count and self.collect_all_optima:
            room = self.cap - len(self.optima)
            self.optima.extend(outcome.optima[:room])
            self.truncated |= outcome.truncated or len(outcome.optima) > room

    def _state(self, next_prefix: tuple[int, ...]) -> Checkpoint:
        return Checkpoint(
            n=self.n,
            best_count=max(self.best_count, 0),
            optima=self.optima,
            next_prefix=list(next_prefix),
            nodes_visited=self.nodes,
            pruned=self.pruned,
            collect_all_optima=self.collect_all_optima,
        )

    def _outcomes(self, tasks: list[tuple[int, ...]]) -> Iterator[TaskOutcome]:
        args = (self.floor, self.collect_all_optima, self.prune, self.cap)
        if self.threads == 1:
            for prefix in tasks:
                yield explore_prefix(self.n, prefix, *args)
            return
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            # bounded look-ahead keeps budget checks close to task boundaries
            batch = 4 * self.threads
            it = iter(tasks)
            while chunk := list(islice(it, batch)):
                futures = [pool.submit(explore_prefix, self.n, p, *args) for p in chunk]
                for future in futures:
                    yield future.result()

    def run(self) -> SearchResult:
        tasks = self._tasks()
        logger.info(
            f"Exhaustive search n={self.n}: {len(tasks)} tasks at depth {self.depth}, "
            f"incumbent {self.floor}, threads={self.threads}"
        )
        since_checkpoint = 0
        done = 0
        cursor: tuple[int, ...] | None = None
        outcomes = self._outcomes(tasks)
        try:
            for outcome in outcomes:
                self._merge(outcome)
                done += 1
                since_checkpoint += outcome.nodes
                if self.on_progress is not None:
                    self.on_progress(done, len(tasks))
                if done == len(tasks):
                    break
                if self.node_budget is not None and self.nodes >= self.node_budget:
                    cursor = tasks[done]
                    logger.warning(
                        f"Node budget {self.node_budget} reached; resume from prefix {list(cursor)}"
                    )
                    break
                if self.checkpoint and since_checkpoint >= settings.SEARCH_CHECKPOINT_EVERY:
                    save_checkpoint(self.checkpoint, self._state(tasks[done]))
                    since_checkpoint = 0
        except KeyboardInterrupt:
            if self.checkpoint and done < len(tasks):
                save_checkpoint(self.checkpoint, self._state(tasks[done]))
                logger.warning(f"Interrupted; checkpoint saved to {self.checkpoint}")
            raise
        finally:
            outcomes.close()

        if self.checkpoint:
            save_checkpoint(self.checkpoint, self._state(cursor or ()))

        best_count, optima = self.best_count, self.optima
        if best_count < 0:
            # no task reached the floor yet; c0 is still a valid lower witness
            best_count = self.incumbent_count
            optima = [canonical_string(self.incumbent.colors)]

        result = SearchResult(
            n=self.n,
            best_count=best_count,
            optima=optima,
            nodes_visited=self.nodes,
            pruned=self.pruned,
            cursor=list(cursor) if cursor is not None else None,
            partial=cursor is not None,
            truncated=self.truncated,
        )
        self._verify(result)
        logger.info(
            f"Exhaustive search n={self.n} done: best={result.best_count}, "
            f"{len(result.optima)} optima, {self.nodes} nodes, {self.pruned} pruned"
        )
        return result

    def _verify(self, result: SearchResult) -> None:
        for s in result.optima:
            coloring = Coloring.from_sequence([int(ch) for ch in s])
            count = classify(coloring).rainbow
            if count != result.best_count:
                raise SearchIntegrityError(
                    f"optimum {s} has {count} rainbow triples, reported {result.best_count}"
                )


def exhaustive_max(
    n: int,
    collect_all_optima: bool = False,
    threads: int = 1,
    checkpoint: Path | None = None,
    prune: bool = True,
    node_budget: int | None = None,
    resume: Checkpoint | None = None,
    on_progress: ProgressCallback | None = None,
) -> SearchResult:
    """Exact maximum rainbow count over all 3^n colorings of [n]."""
    return ExhaustiveSearch(
        n,
        collect_all_optima=collect_all_optima,
        threads=threads,
        checkpoint=checkpoint,
        prune=prune,
        node_budget=node_budget,
        resume=resume,
        on_progress=on_progress,
    ).run()
