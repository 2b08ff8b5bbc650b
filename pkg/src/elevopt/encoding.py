"""Continuous-vector encodings of routes and the shared tail-swap move.

Swarm-style optimizers work on real vectors with one component per
non-starting floor; slot i owns the i-th such floor in ascending order.
A vector decodes to a route by ranking its components and visiting the
matching floors in rank order, then repairing feasibility, so any
finite vector yields a valid feasible route. Ties break toward the
lower slot index to keep decoding deterministic.
"""

from __future__ import annotations

import numpy as np

from .cost import fitness, repair_route
from .model import ProblemInstance, Route


def slot_floors(instance: ProblemInstance) -> tuple[int, ...]:
    """Non-starting floors in ascending order; slot i of a vector owns the i-th."""
    return tuple(f for f in range(instance.num_floors) if f != instance.initial_floor)


def _as_position(values, instance: ProblemInstance) -> np.ndarray:
    array = np.asarray(values, dtype=float)
    expected = instance.num_floors - 1
    if array.shape != (expected,):
        raise ValueError(f"position must have {expected} components, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise ValueError("position components must be finite")
    return array


def _decode(sort_key: np.ndarray, instance: ProblemInstance) -> Route:
    order = np.argsort(sort_key, kind="stable")
    floors = slot_floors(instance)
    stops = (instance.initial_floor,) + tuple(floors[i] for i in order)
    return repair_route(Route(stops), instance)


def spv_decode(values, instance: ProblemInstance) -> Route:
    """Decode by ascending component value: the smallest value's floor is visited first."""
    return _decode(_as_position(values, instance), instance)


def gvp_decode(values, instance: ProblemInstance) -> Route:
    """Decode by descending component value; equals spv_decode of the negated vector."""
    return _decode(-_as_position(values, instance), instance)


def distinct_pair(count: int, rng: np.random.Generator) -> tuple[int, int]:
    """Two distinct indices in [0, count), uniform over ordered pairs."""
    first = int(rng.integers(count))
    second = int(rng.integers(count - 1))
    if second >= first:
        second += 1
    return first, second


def random_swap(
    route: Route, instance: ProblemInstance, rng: np.random.Generator
) -> Route:
    """Swap two uniformly chosen tail stops (the head never moves), then repair."""
    floors = len(route.stops)
    if floors < 3:
        raise ValueError("need at least two tail positions to swap")
    i, j = distinct_pair(floors - 1, rng)
    stops = list(route.stops)
    stops[i + 1], stops[j + 1] = stops[j + 1], stops[i + 1]
    return repair_route(Route(tuple(stops)), instance)


def improve_once(
    route: Route,
    current_fitness: float | None,
    instance: ProblemInstance,
    rng: np.random.Generator,
) -> tuple[Route, float]:
    """One random tail swap, kept only on strict improvement; returns (route, fitness).

    Passing the route's known fitness avoids re-evaluating it; the
    unimproved input comes back as the same object.
    """
    candidate = random_swap(route, instance, rng)
    candidate_fitness = fitness(candidate, instance)
    if current_fitness is None:
        current_fitness = fitness(route, instance)
    if candidate_fitness < current_fitness:
        return candidate, candidate_fitness
    return route, current_fitness


def local_search_2swap(
    route: Route, instance: ProblemInstance, rng: np.random.Generator
) -> Route:
    """Try one random tail swap; keep it only on strict fitness improvement."""
    return improve_once(route, None, instance, rng)[0]
