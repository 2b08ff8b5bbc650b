"""Multi-run experiment driver: per-algorithm statistics and convergence export.

Repeats a run configuration with deterministically derived seeds, then
summarizes the per-run best fitnesses into an average and a minimum,
one summary per algorithm. Convergence histories can be exported as CSV
for plotting; regenerating either artifact with the same base seed is
byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable

import numpy as np

from .algorithms import ALGORITHMS, RunConfig, RunResult, run
from .model import ProblemInstance


def derive_run_seed(base_seed: int, run_index: int) -> int:
    """Stable per-run seed mixed from the experiment seed and the run number."""
    sequence = np.random.SeedSequence([base_seed, run_index])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class AlgorithmComparison:
    """Summary of repeated runs of one algorithm on one instance."""

    algorithm: str
    seeds: tuple[int, ...]
    best_fitnesses: tuple[float, ...]
    avg_best_fitness: float
    optimal_fitness: float

    @property
    def runs(self) -> int:
        return len(self.best_fitnesses)

    @classmethod
    def from_runs(cls, algorithm: str, seeds, best_fitnesses) -> "AlgorithmComparison":
        bests = tuple(float(b) for b in best_fitnesses)
        if not bests:
            raise ValueError("need at least one run to summarize")
        return cls(
            algorithm=algorithm,
            seeds=tuple(int(s) for s in seeds),
            best_fitnesses=bests,
            avg_best_fitness=sum(bests) / len(bests),
            optimal_fitness=min(bests),
        )


@dataclass(frozen=True)
class ComparisonReport:
    """Per-algorithm averages and minima over a fixed number of runs."""

    base_seed: int
    runs: int
    entries: tuple[AlgorithmComparison, ...]

    def entry(self, algorithm: str) -> AlgorithmComparison:
        for candidate in self.entries:
            if candidate.algorithm == algorithm:
                return candidate
        raise KeyError(algorithm)


def multi_run(
    instance: ProblemInstance, base_config: RunConfig, runs: int = 5
) -> tuple[AlgorithmComparison, list[RunResult]]:
    """Run one algorithm `runs` times with derived seeds and summarize the bests."""
    if runs < 1:
        raise ValueError("runs must be at least 1")
    results: list[RunResult] = []
    for index in range(runs):
        config = replace(base_config, seed=derive_run_seed(base_config.seed, index))
        results.append(run(instance, config))
    summary = AlgorithmComparison.from_runs(
        base_config.algorithm,
        (r.seed for r in results),
        (r.best_fitness for r in results),
    )
    return summary, results


def run_comparison(
    instance: ProblemInstance,
    base_seed: int,
    runs: int = 5,
    max_iterations: int = 100,
) -> tuple[ComparisonReport, dict[str, list[RunResult]]]:
    """Run every algorithm with factory-default parameters on one instance."""
    entries = []
    all_results: dict[str, list[RunResult]] = {}
    for algorithm in ALGORITHMS:
        config = RunConfig(algorithm=algorithm, seed=base_seed, max_iterations=max_iterations)
        summary, results = multi_run(instance, config, runs=runs)
        entries.append(summary)
        all_results[algorithm] = results
    report = ComparisonReport(base_seed=base_seed, runs=runs, entries=tuple(entries))
    return report, all_results


def export_convergence(results: Iterable[RunResult], destination) -> Path:
    """Write best-so-far-per-iteration rows as CSV.

    Columns: algorithm, run (0-based per algorithm, in input order),
    iteration, best_so_far (fixed 6-decimal precision). The same
    results always produce the same bytes.
    """
    results = list(results)
    if not results:
        raise ValueError("no results to export")
    lines = ["algorithm,run,iteration,best_so_far"]
    run_index: dict[str, int] = {}
    for result in results:
        index = run_index.get(result.algorithm, 0)
        run_index[result.algorithm] = index + 1
        for iteration, value in enumerate(result.history):
            lines.append(f"{result.algorithm},{index},{iteration},{value:.6f}")
    path = Path(destination)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
