import numpy as np
import pytest

from elevopt import Passenger, ProblemInstance, Route, TimingParams, case_study, is_feasible


@pytest.fixture
def tiny_instance():
    """Three floors, one passenger riding 1 -> 2, cab starting at 0."""
    return ProblemInstance(3, 0, (Passenger(1, 2),))


@pytest.fixture
def two_passenger_instance():
    """Five floors, passengers 1 -> 2 and 3 -> 4, cab starting at 0."""
    return ProblemInstance(5, 0, (Passenger(1, 2), Passenger(3, 4)))


@pytest.fixture
def case_instance():
    return case_study()


def make_random_instance(rng, min_floors=3, max_floors=9, max_passengers=3,
                         random_timing=True):
    """Random valid instance: distinct event floors, distinct from the start floor."""
    floors = int(rng.integers(min_floors, max_floors + 1))
    cap = min(max_passengers, (floors - 1) // 2)
    count = int(rng.integers(1, cap + 1))
    chosen = rng.choice(floors, size=2 * count + 1, replace=False)
    initial = int(chosen[0])
    passengers = tuple(
        Passenger(int(chosen[1 + 2 * k]), int(chosen[2 + 2 * k])) for k in range(count)
    )
    if random_timing:
        opening, closing, load, between = (int(v) for v in rng.integers(0, 7, size=4))
        timing = TimingParams(opening, closing, load, between)
    else:
        timing = TimingParams()
    return ProblemInstance(floors, initial, passengers, timing)


def random_feasible_route(rng, instance):
    """Uniform feasible route by rejection sampling (independent of repair_route)."""
    floors = [f for f in range(instance.num_floors) if f != instance.initial_floor]
    while True:
        tail = rng.permutation(np.asarray(floors, dtype=int))
        route = Route((instance.initial_floor,) + tuple(int(f) for f in tail))
        if is_feasible(route, instance):
            return route
