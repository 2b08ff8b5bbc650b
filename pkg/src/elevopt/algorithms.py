"""Four stochastic route optimizers behind one run interface.

Each optimizer takes a problem instance plus a RunConfig and returns a
RunResult carrying the best route found, its fitness, and the
best-so-far fitness after every iteration (entry 0 is the best of the
initial state, so convergence curves of all algorithms align). All
randomness flows from one generator seeded by the config, so identical
configs reproduce identical results; wall time is the only
non-deterministic field.

The iteration budget is always active. A target fitness and a
stagnation window can additionally stop a run early; simulated
annealing also stops when its temperature reaches the floor.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Union

import numpy as np

from .cost import fitness, repair_route
from .encoding import (
    distinct_pair,
    gvp_decode,
    improve_once,
    random_swap,
    slot_floors,
    spv_decode,
)
from .model import ProblemInstance, Route

ALGORITHMS = ("sa", "ga", "pso", "woa")


@dataclass(frozen=True)
class SaParams:
    """Annealing schedule: geometric cooling from the initial to the final temperature."""

    initial_temperature: float = 200.0
    final_temperature: float = 0.01
    iterations_per_temperature: int = 1
    cooling: float | None = None  # None: derived so the iteration budget lands on final_temperature

    def validate(self) -> None:
        if not self.initial_temperature > self.final_temperature > 0:
            raise ValueError("need initial_temperature > final_temperature > 0")
        if self.iterations_per_temperature < 1:
            raise ValueError("iterations_per_temperature must be at least 1")
        if self.cooling is not None and not 0 < self.cooling < 1:
            raise ValueError("cooling factor must lie in (0, 1)")


@dataclass(frozen=True)
class GaParams:
    """Population split for the generational loop: elites + children + mutants.

    Each mutant is seeded from a best member and refined by a short
    chain of keep-if-better tail swaps before entering the population;
    mutant_refinements sets the chain length (0 disables refinement and
    leaves a plain swap mutant).
    """

    population_size: int = 4
    elite_count: int = 1
    crossover_count: int = 2
    mutant_count: int = 1
    mutant_refinements: int = 4

    def validate(self) -> None:
        counts = (self.elite_count, self.crossover_count, self.mutant_count)
        if self.population_size < 1 or any(c < 0 for c in counts):
            raise ValueError("population must be >= 1 and member counts non-negative")
        if sum(counts) != self.population_size:
            raise ValueError("elite + crossover + mutant counts must equal the population size")
        if self.crossover_count > 0 and self.population_size < 2:
            raise ValueError("crossover needs at least two parents in the population")
        if self.mutant_refinements < 0:
            raise ValueError("mutant_refinements must be non-negative")


@dataclass(frozen=True)
class PsoParams:
    population_size: int = 4
    inertia: float = 0.792
    cognitive: float = 1.4994
    social: float = 1.4994
    velocity_clamp: float | None = None  # None: half the floor count
    init_range: tuple[float, float] | None = None  # None: [0, num_floors]

    def validate(self) -> None:
        if self.population_size < 2:
            raise ValueError("particle swarm needs a population of at least 2")
        if min(self.inertia, self.cognitive, self.social) <= 0:
            raise ValueError("inertia, cognitive, and social weights must be positive")
        if self.velocity_clamp is not None and self.velocity_clamp <= 0:
            raise ValueError("velocity clamp must be positive")
        if self.init_range is not None and not self.init_range[0] < self.init_range[1]:
            raise ValueError("init_range must be an increasing pair")


@dataclass(frozen=True)
class WoaParams:
    population_size: int = 4
    spiral_constant: float = 1.0
    local_search_enabled: bool = True

    def validate(self) -> None:
        if self.population_size < 2:
            raise ValueError("whale swarm needs a population of at least 2")


Params = Union[SaParams, GaParams, PsoParams, WoaParams]

_DEFAULT_PARAMS = {
    "sa": SaParams,
    "ga": GaParams,
    "pso": PsoParams,
    "woa": WoaParams,
}


def default_params(algorithm: str) -> Params:
    """Factory-default parameter set for the named algorithm."""
    try:
        return _DEFAULT_PARAMS[algorithm]()
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None


@dataclass(frozen=True)
class RunConfig:
    """Everything needed to reproduce one optimization run."""

    algorithm: str
    seed: int = 0
    max_iterations: int = 100
    algorithm_params: Params | None = None
    target_fitness: float | None = None
    stagnation_window: int | None = None

    def validate(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; expected one of {ALGORITHMS}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a non-negative 64-bit integer")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be non-negative")
        if self.stagnation_window is not None and self.stagnation_window < 1:
            raise ValueError("stagnation_window must be at least 1")


@dataclass(frozen=True)
class RunResult:
    """Outcome of one run; history[k] is the best fitness after k iterations."""

    algorithm: str
    seed: int
    best_route: Route
    best_fitness: float
    history: tuple[float, ...]
    evaluations: int
    wall_time_s: float


class _Tracker:
    """Best-so-far bookkeeping and early-stop logic shared by every optimizer."""

    def __init__(self, config: RunConfig, route: Route, fit: float):
        self._config = config
        self.best_route = route
        self.best_fitness = fit
        self.history = [fit]
        self._stagnant = 0

    def offer(self, route: Route, fit: float) -> None:
        if fit < self.best_fitness:
            self.best_route = route
            self.best_fitness = fit

    def satisfied(self) -> bool:
        """True when the initial state already meets the target fitness."""
        target = self._config.target_fitness
        return target is not None and self.best_fitness <= target

    def close_iteration(self) -> bool:
        """Record this iteration's best and report whether to stop early."""
        improved = self.best_fitness < self.history[-1]
        self.history.append(self.best_fitness)
        config = self._config
        if config.target_fitness is not None and self.best_fitness <= config.target_fitness:
            return True
        if config.stagnation_window is not None:
            self._stagnant = 0 if improved else self._stagnant + 1
            if self._stagnant >= config.stagnation_window:
                return True
        return False


def _checked_params(config: RunConfig, expected: type) -> Params:
    config.validate()
    params = config.algorithm_params
    if params is None:
        params = expected()
    if not isinstance(params, expected):
        raise ValueError(
            f"{config.algorithm} run needs {expected.__name__}, got {type(params).__name__}"
        )
    params.validate()
    return params


def _result(config: RunConfig, tracker: _Tracker, evaluations: int, started: float) -> RunResult:
    return RunResult(
        algorithm=config.algorithm,
        seed=config.seed,
        best_route=tracker.best_route,
        best_fitness=tracker.best_fitness,
        history=tuple(tracker.history),
        evaluations=evaluations,
        wall_time_s=time.perf_counter() - started,
    )


def random_route(instance: ProblemInstance, rng: np.random.Generator) -> Route:
    """Uniform random feasible route: shuffled tail, then repair."""
    tail = rng.permutation(np.asarray(slot_floors(instance), dtype=int))
    stops = (instance.initial_floor,) + tuple(int(f) for f in tail)
    return repair_route(Route(stops), instance)


# ---------------------------------------------------------------------------
# simulated annealing


def geometric_cooling_factor(
    initial_temperature: float, final_temperature: float, iterations: int
) -> float:
    """Factor alpha with initial * alpha**iterations == final."""
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    return (final_temperature / initial_temperature) ** (1.0 / iterations)


def sa_accept(delta: float, temperature: float, rng: np.random.Generator) -> bool:
    """Accept improvements always, worsenings with probability exp(-delta/temperature)."""
    if delta < 0:
        return True
    return rng.random() < math.exp(-delta / temperature)


def run_sa(instance: ProblemInstance, config: RunConfig) -> RunResult:
    """Single-trajectory annealing over the tail-swap neighborhood."""
    params = _checked_params(config, SaParams)
    started = time.perf_counter()
    rng = np.random.default_rng(config.seed)

    current = random_route(instance, rng)
    current_fitness = fitness(current, instance)
    evaluations = 1
    tracker = _Tracker(config, current, current_fitness)

    alpha = params.cooling
    if alpha is None:
        alpha = geometric_cooling_factor(
            params.initial_temperature,
            params.final_temperature,
            max(config.max_iterations, 1),
        )
    temperature = params.initial_temperature
    if not tracker.satisfied():
        for _ in range(config.max_iterations):
            if temperature <= params.final_temperature:
                break
            for _ in range(params.iterations_per_temperature):
                candidate = random_swap(current, instance, rng)
                candidate_fitness = fitness(candidate, instance)
                evaluations += 1
                if sa_accept(candidate_fitness - current_fitness, temperature, rng):
                    current, current_fitness = candidate, candidate_fitness
                    tracker.offer(current, current_fitness)
            temperature *= alpha
            if tracker.close_iteration():
                break
    return _result(config, tracker, evaluations, started)


# ---------------------------------------------------------------------------
# genetic algorithm


def ox_crossover(parent1_tail, parent2_tail, cut_lo: int, cut_hi: int) -> tuple[int, ...]:
    """Order crossover: keep parent1's segment, fill the rest in parent2's order.

    The child copies parent1 positions cut_lo..cut_hi inclusive. The
    remaining positions, starting after the segment and wrapping, take
    parent2's genes scanned in the same wrapped order, skipping genes
    already present.
    """
    p1 = tuple(parent1_tail)
    p2 = tuple(parent2_tail)
    size = len(p1)
    if size == 0 or len(p2) != size or len(set(p1)) != size or set(p1) != set(p2):
        raise ValueError("parents must be permutations of the same genes")
    if not 0 <= cut_lo <= cut_hi < size:
        raise ValueError(f"invalid cut points ({cut_lo}, {cut_hi}) for length {size}")
    child: list = [None] * size
    child[cut_lo : cut_hi + 1] = p1[cut_lo : cut_hi + 1]
    present = set(p1[cut_lo : cut_hi + 1])
    donors = (p2[(cut_hi + 1 + k) % size] for k in range(size))
    fill = (gene for gene in donors if gene not in present)
    for offset in range(size - (cut_hi - cut_lo + 1)):
        child[(cut_hi + 1 + offset) % size] = next(fill)
    return tuple(child)


def swap_mutation(tail, rng: np.random.Generator) -> tuple[int, ...]:
    """Exchange two uniformly chosen distinct positions."""
    genes = list(tail)
    if len(genes) < 2:
        raise ValueError("need at least two positions to swap")
    i, j = distinct_pair(len(genes), rng)
    genes[i], genes[j] = genes[j], genes[i]
    return tuple(genes)


def ga_generation(
    population: list[Route],
    fitnesses: list[float],
    instance: ProblemInstance,
    params: GaParams,
    rng: np.random.Generator,
) -> list[Route]:
    """Next generation: elites kept verbatim, children of the two best, refined mutants.

    Offspring that duplicate a member already placed in the new
    generation are re-mutated (up to a few attempts); with a tiny
    population the elite and its children otherwise collapse into
    copies and the search stalls. Mutants start from the best members
    and run a short keep-if-better swap chain, falling back to a plain
    swap sample when no attempt improves.
    """
    order = sorted(range(len(population)), key=fitnesses.__getitem__)
    head = instance.initial_floor
    next_population = [population[i] for i in order[: params.elite_count]]
    seen = {route.stops for route in next_population}

    def place(route: Route) -> None:
        for _ in range(10):
            if route.stops not in seen:
                break
            mutated = swap_mutation(route.tail, rng)
            route = repair_route(Route((head,) + mutated), instance)
        seen.add(route.stops)
        next_population.append(route)

    if params.crossover_count:
        first = population[order[0]]
        second = population[order[1]]
        tail_length = len(first.stops) - 1
        produced = 0
        while produced < params.crossover_count:
            lo, hi = sorted(int(c) for c in rng.integers(0, tail_length, size=2))
            for tail_a, tail_b in ((first.tail, second.tail), (second.tail, first.tail)):
                if produced == params.crossover_count:
                    break
                child_tail = ox_crossover(tail_a, tail_b, lo, hi)
                place(repair_route(Route((head,) + child_tail), instance))
                produced += 1
    for i in order[: params.mutant_count]:
        source = population[i]
        refined = source
        refined_fitness = fitnesses[i]
        for _ in range(params.mutant_refinements):
            refined, refined_fitness = improve_once(refined, refined_fitness, instance, rng)
        if refined is source:
            mutated = swap_mutation(source.tail, rng)
            refined = repair_route(Route((head,) + mutated), instance)
        place(refined)
    return next_population


def run_ga(instance: ProblemInstance, config: RunConfig) -> RunResult:
    """Elitist generational search with order crossover and swap mutation."""
    params = _checked_params(config, GaParams)
    started = time.perf_counter()
    rng = np.random.default_rng(config.seed)

    population = [random_route(instance, rng) for _ in range(params.population_size)]
    fitnesses = [fitness(r, instance) for r in population]
    evaluations = params.population_size
    best = min(range(len(population)), key=fitnesses.__getitem__)
    tracker = _Tracker(config, population[best], fitnesses[best])
    if not tracker.satisfied():
        for _ in range(config.max_iterations):
            population = ga_generation(population, fitnesses, instance, params, rng)
            fitnesses = [fitness(r, instance) for r in population]
            # population scoring plus one candidate per mutant refinement attempt
            evaluations += len(population) + params.mutant_count * params.mutant_refinements
            best = min(range(len(population)), key=fitnesses.__getitem__)
            tracker.offer(population[best], fitnesses[best])
            if tracker.close_iteration():
                break
    return _result(config, tracker, evaluations, started)


# ---------------------------------------------------------------------------
# particle swarm


def pso_move(
    velocity: np.ndarray,
    position: np.ndarray,
    personal_best: np.ndarray,
    neighborhood_best: np.ndarray,
    params: PsoParams,
    r1: np.ndarray,
    r2: np.ndarray,
    clamp: float,
) -> tuple[np.ndarray, np.ndarray]:
    """One velocity/position update; velocity components are clamped to +-clamp."""
    velocity = (
        params.inertia * velocity
        + params.cognitive * r1 * (personal_best - position)
        + params.social * r2 * (neighborhood_best - position)
    )
    np.clip(velocity, -clamp, clamp, out=velocity)
    return velocity, position + velocity


def run_pso(instance: ProblemInstance, config: RunConfig) -> RunResult:
    """Particle swarm over continuous vectors decoded by ascending rank."""
    params = _checked_params(config, PsoParams)
    started = time.perf_counter()
    rng = np.random.default_rng(config.seed)
    dims = instance.num_floors - 1
    low, high = params.init_range or (0.0, float(instance.num_floors))
    clamp = (
        params.velocity_clamp
        if params.velocity_clamp is not None
        else instance.num_floors / 2
    )

    positions = rng.uniform(low, high, size=(params.population_size, dims))
    velocities = np.zeros_like(positions)
    routes = [spv_decode(p, instance) for p in positions]
    fits = [fitness(r, instance) for r in routes]
    evaluations = params.population_size

    personal_positions = positions.copy()
    personal_fits = list(fits)
    personal_routes = list(routes)
    leader = min(range(len(fits)), key=fits.__getitem__)
    swarm_best_position = positions[leader].copy()
    tracker = _Tracker(config, routes[leader], fits[leader])

    if not tracker.satisfied():
        for _ in range(config.max_iterations):
            attractor = swarm_best_position  # frozen for the whole iteration
            for i in range(params.population_size):
                r1 = rng.random(dims)
                r2 = rng.random(dims)
                velocities[i], positions[i] = pso_move(
                    velocities[i], positions[i], personal_positions[i],
                    attractor, params, r1, r2, clamp,
                )
                route = spv_decode(positions[i], instance)
                fit = fitness(route, instance)
                evaluations += 1
                if fit < personal_fits[i]:
                    personal_fits[i] = fit
                    personal_positions[i] = positions[i].copy()
                    personal_routes[i] = route
            leader = min(range(params.population_size), key=personal_fits.__getitem__)
            if personal_fits[leader] < tracker.best_fitness:
                swarm_best_position = personal_positions[leader].copy()
            tracker.offer(personal_routes[leader], personal_fits[leader])
            if tracker.close_iteration():
                break
    return _result(config, tracker, evaluations, started)


# ---------------------------------------------------------------------------
# whale-style swarm


def woa_exploration(iteration: int, max_iterations: int) -> float:
    """Exploration weight, falling linearly from 2 at the start to 0 at the last iteration."""
    if max_iterations < 1:
        raise ValueError("max_iterations must be at least 1")
    return 2.0 - 2.0 * iteration / max_iterations


def run_woa(instance: ProblemInstance, config: RunConfig) -> RunResult:
    """Whale-style swarm over continuous vectors decoded by descending rank.

    Each agent either contracts toward the best position found so far,
    explores against a random agent, or spirals in, depending on random
    draws; an optional one-swap local search polishes every decoded
    route.
    """
    params = _checked_params(config, WoaParams)
    started = time.perf_counter()
    rng = np.random.default_rng(config.seed)
    dims = instance.num_floors - 1
    positions = rng.uniform(0.0, float(instance.num_floors), size=(params.population_size, dims))
    evaluations = 0

    def assess(position: np.ndarray) -> tuple[Route, float]:
        nonlocal evaluations
        route = gvp_decode(position, instance)
        fit = fitness(route, instance)
        evaluations += 1
        if params.local_search_enabled:
            route, fit = improve_once(route, fit, instance, rng)
            evaluations += 1
        return route, fit

    routes: list[Route] = []
    fits: list[float] = []
    for i in range(params.population_size):
        route, fit = assess(positions[i])
        routes.append(route)
        fits.append(fit)
    leader = min(range(len(fits)), key=fits.__getitem__)
    prey_position = positions[leader].copy()  # best position found so far
    tracker = _Tracker(config, routes[leader], fits[leader])

    if not tracker.satisfied():
        for iteration in range(1, config.max_iterations + 1):
            a = woa_exploration(iteration, config.max_iterations)
            target = prey_position  # frozen for this iteration
            round_best_fit: float | None = None
            round_best_route: Route | None = None
            round_best_position: np.ndarray | None = None
            for i in range(params.population_size):
                coef_a = 2.0 * a * rng.random(dims) - a
                coef_c = 2.0 * rng.random(dims)
                chance = rng.random()
                twist = rng.uniform(-1.0, 1.0)
                x = positions[i]
                if chance < 0.5:
                    if float(np.linalg.norm(coef_a)) < 1.0:
                        x = target - coef_a * np.abs(coef_c * target - x)
                    else:
                        other = positions[int(rng.integers(params.population_size))]
                        x = other - coef_a * np.abs(coef_c * other - x)
                else:
                    gap = np.abs(target - x)
                    x = (
                        gap
                        * math.exp(params.spiral_constant * twist)
                        * math.cos(2.0 * math.pi * twist)
                        + target
                    )
                positions[i] = x
                route, fit = assess(positions[i])
                if round_best_fit is None or fit < round_best_fit:
                    round_best_fit = fit
                    round_best_route = route
                    round_best_position = positions[i].copy()
            if round_best_fit is not None and round_best_fit < tracker.best_fitness:
                prey_position = round_best_position
            tracker.offer(round_best_route, round_best_fit)
            if tracker.close_iteration():
                break
    return _result(config, tracker, evaluations, started)


# ---------------------------------------------------------------------------

_RUNNERS = {"sa": run_sa, "ga": run_ga, "pso": run_pso, "woa": run_woa}


def run(instance: ProblemInstance, config: RunConfig) -> RunResult:
    """Dispatch to the configured optimizer."""
    config.validate()
    return _RUNNERS[config.algorithm](instance, config)
