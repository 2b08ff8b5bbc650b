"""Acceptance gate: the binding correctness and behavior checks for the suite.

Each test is one criterion; run with `pytest tests/test_acceptance.py -v`
to get one pass/fail line per criterion.
"""

import json
import math
import time

import numpy as np

from elevopt import (
    Route,
    RunConfig,
    case_study,
    evaluate_all,
    exhaustive_best,
    export_convergence,
    fitness,
    is_feasible,
    run_comparison,
    run_ga,
    sa_accept,
    simulate_route,
)
from elevopt.algorithms import ox_crossover, swap_mutation
from elevopt.cli import main
from elevopt.cost import repair_route
from elevopt.encoding import gvp_decode, random_swap, spv_decode
from elevopt.harness import derive_run_seed

from conftest import make_random_instance, random_feasible_route
from test_model import CASE_STUDY_ROUTES


def test_closed_form_matches_simulation_on_random_instances():
    """Per-passenger times from the closed form equal the replayed timeline exactly."""
    rng = np.random.default_rng(2024)
    started = time.perf_counter()
    for _ in range(1000):
        instance = make_random_instance(rng, min_floors=3, max_floors=9, max_passengers=3)
        route = random_feasible_route(rng, instance)
        simulated = simulate_route(route, instance).passenger_times
        computed = evaluate_all(route, instance)
        for sim, calc in zip(simulated, computed):
            assert sim.waiting_s == calc.waiting_s
            assert sim.destination_s == calc.destination_s
            assert sim.journey_s == calc.journey_s
    assert time.perf_counter() - started < 10.0


def test_case_study_reference_route_fitness():
    """The strongest known case-study route evaluates to 228.1 s exactly."""
    value = fitness(Route(CASE_STUDY_ROUTES["ga"]), case_study())
    assert value == 228.1
    # stays within 3% of the independently reported value for this route
    assert abs(value - 222.3) / 222.3 < 0.03


def test_all_reference_routes_feasible():
    instance = case_study()
    for stops in CASE_STUDY_ROUTES.values():
        assert is_feasible(Route(stops), instance)


def test_ga_average_ranks_first_across_batches():
    """GA has the strictly lowest 5-run average in at least 4 of 5 batches."""
    instance = case_study()
    first_count = 0
    for base_seed in (1, 2, 3, 4, 5):
        started = time.perf_counter()
        report, _ = run_comparison(instance, base_seed=base_seed, runs=5, max_iterations=100)
        assert time.perf_counter() - started < 30.0
        averages = {e.algorithm: e.avg_best_fitness for e in report.entries}
        ga_average = averages.pop("ga")
        first_count += all(ga_average < other for other in averages.values())
    assert first_count >= 4


def test_small_instances_near_optimal_and_never_below_optimum():
    """GA gets within 5% of the exhaustive optimum on >=90% of tiny instances;
    no algorithm ever reports a fitness below the true optimum."""
    rng = np.random.default_rng(77)
    started = time.perf_counter()
    near_optimal = 0
    total = 50
    for index in range(total):
        instance = make_random_instance(rng, min_floors=4, max_floors=6,
                                        max_passengers=2, random_timing=False)
        _, optimum = exhaustive_best(instance)

        ga_best = min(
            run_ga(instance, RunConfig("ga", seed=derive_run_seed(index, attempt),
                                       max_iterations=500)).best_fitness
            for attempt in range(5)
        )
        assert ga_best >= optimum - 1e-9
        if ga_best <= 1.05 * optimum:
            near_optimal += 1

        report, _ = run_comparison(instance, base_seed=index, runs=1, max_iterations=100)
        for entry in report.entries:
            assert entry.optimal_fitness >= optimum - 1e-9
    assert near_optimal >= 45
    assert time.perf_counter() - started < 60.0


def test_history_non_increasing_and_ends_at_best(tmp_path):
    instance = case_study()
    _, results = run_comparison(instance, base_seed=99, runs=5, max_iterations=50)
    ordered = [r for name in ("sa", "ga", "pso", "woa") for r in results[name]]
    for result in ordered:
        history = result.history
        assert all(b <= a for a, b in zip(history, history[1:]))
        assert history[-1] == result.best_fitness
        assert fitness(result.best_route, instance) == result.best_fitness
    # the exported series must show the same monotone shape and endpoints
    destination = tmp_path / "convergence.csv"
    export_convergence(ordered, destination)
    series = {}
    for line in destination.read_text().strip().splitlines()[1:]:
        algorithm, run_index, _, value = line.split(",")
        series.setdefault((algorithm, int(run_index)), []).append(float(value))
    assert len(series) == 20
    position = {}
    for result in ordered:
        index = position.get(result.algorithm, 0)
        position[result.algorithm] = index + 1
        exported = series[(result.algorithm, index)]
        assert exported == sorted(exported, reverse=True)
        assert exported[-1] == float(f"{result.best_fitness:.6f}")


def test_compare_cli_outputs_byte_identical(tmp_path):
    directories = [tmp_path / "first", tmp_path / "second"]
    for out_dir in directories:
        code = main(["compare", "--case-study", "--runs", "5", "--seed", "7",
                     "--iterations", "100", "--out-dir", str(out_dir)])
        assert code == 0
    first, second = directories
    assert (first / "comparison.json").read_bytes() == (second / "comparison.json").read_bytes()
    assert (first / "convergence.csv").read_bytes() == (second / "convergence.csv").read_bytes()
    json.loads((first / "comparison.json").read_text())  # stays parseable


def test_sa_acceptance_rate_matches_the_law():
    """Empirical acceptance at (delta=200, T=200) within 3 standard errors of exp(-1)."""
    rng = np.random.default_rng(123)
    trials = 10_000
    accepted = sum(sa_accept(200.0, 200.0, rng) for _ in range(trials))
    expected = math.exp(-1.0)
    standard_error = math.sqrt(expected * (1.0 - expected) / trials)
    assert abs(accepted / trials - expected) < 3.0 * standard_error


def test_operators_preserve_permutations():
    """10k randomized applications per operator keep routes valid, feasible, and repairable."""
    rng = np.random.default_rng(4321)
    for _ in range(10_000):
        instance = make_random_instance(rng, min_floors=3, max_floors=7, max_passengers=2)
        floors = instance.num_floors
        head = instance.initial_floor
        route = random_feasible_route(rng, instance)
        expected_floors = list(range(floors))

        def check(candidate):
            assert sorted(candidate.stops) == expected_floors
            assert candidate.stops[0] == head

        # crossover on tails
        other = random_feasible_route(rng, instance)
        lo, hi = sorted(int(c) for c in rng.integers(0, floors - 1, size=2))
        child_tail = ox_crossover(route.tail, other.tail, lo, hi)
        check(Route((head,) + child_tail))

        # swap mutation on tails
        if floors >= 3:
            mutated_tail = swap_mutation(route.tail, rng)
            check(Route((head,) + mutated_tail))
            check(random_swap(route, instance, rng))

        # decoders accept arbitrary reals including duplicates and negatives
        raw = rng.choice([-1.5, 0.0, 0.25, 2.0], size=floors - 1)
        decoded_low = spv_decode(raw, instance)
        decoded_high = gvp_decode(raw, instance)
        for decoded in (decoded_low, decoded_high):
            check(decoded)
            assert is_feasible(decoded, instance)

        # duality on a tie-free vector
        tie_free = rng.permutation(np.arange(floors - 1, dtype=float) + 0.5)
        assert gvp_decode(tie_free, instance) == spv_decode(-tie_free, instance)

        # repair: feasible output, idempotent
        scrambled_tail = rng.permutation(np.asarray(route.tail, dtype=int))
        scrambled = Route((head,) + tuple(int(f) for f in scrambled_tail))
        repaired = repair_route(scrambled, instance)
        check(repaired)
        assert is_feasible(repaired, instance)
        assert repair_route(repaired, instance) is repaired
