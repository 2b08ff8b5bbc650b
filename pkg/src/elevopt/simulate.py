"""Step-by-step replay of a route, independent of the closed-form model.

The cab starts at the first stop at time zero and follows the route in
order, paying the between-floor time for every floor crossed. At each
stop that hosts a boarding or drop-off it opens the doors, transfers
one passenger, and closes the doors; floors with no event are passed
without stopping. Per-passenger times are read directly off the event
timeline, which makes this a reference to check the closed-form model
against. A brute-force optimum finder for small instances lives here
for the same reason: it exists for verification, not speed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cost import PassengerTimes
from .model import InfeasibleRouteError, ProblemInstance, Route, floor_positions

DEPART = "depart"
ARRIVE = "arrive"
DOORS_OPEN = "doors_open"
PICKUP = "pickup"
DROPOFF = "dropoff"
DOORS_CLOSE = "doors_close"


@dataclass(frozen=True)
class TimelineEvent:
    time_s: int
    kind: str
    floor: int


@dataclass(frozen=True)
class SimulationResult:
    passenger_times: tuple[PassengerTimes, ...]
    timeline: tuple[TimelineEvent, ...]


def simulate_route(route: Route, instance: ProblemInstance) -> SimulationResult:
    """Replay the route and report per-passenger times plus the full timeline.

    Waiting time ends when the doors finish opening at the call floor;
    the ride is timed from the moment the passenger finishes boarding
    (doors start closing) to the doors finishing opening at the
    destination. Event timestamps mark completion of each step.
    """
    positions = floor_positions(route, instance)
    boarding_at: dict[int, int] = {}
    leaving_at: dict[int, int] = {}
    for index, p in enumerate(instance.passengers):
        if positions[p.destination_floor] < positions[p.call_floor]:
            raise InfeasibleRouteError(
                f"precedence violated: passenger {index + 1} would be dropped off "
                "before being picked up"
            )
        boarding_at[p.call_floor] = index
        leaving_at[p.destination_floor] = index

    timing = instance.timing
    count = len(instance.passengers)
    waiting = [0] * count
    ride_start = [0] * count
    destination = [0] * count

    now = 0
    events = [TimelineEvent(0, DEPART, route.stops[0])]
    previous = route.stops[0]
    last = len(route.stops) - 1
    for k in range(1, len(route.stops)):
        floor = route.stops[k]
        now += timing.between_floors_time_s * abs(floor - previous)
        previous = floor
        boarder = boarding_at.get(floor)
        leaver = leaving_at.get(floor)
        if boarder is None and leaver is None:
            if k == last:
                events.append(TimelineEvent(now, ARRIVE, floor))
            continue
        events.append(TimelineEvent(now, ARRIVE, floor))
        now += timing.opening_time_s
        events.append(TimelineEvent(now, DOORS_OPEN, floor))
        if boarder is not None:
            waiting[boarder] = now
            now += timing.passenger_load_time_s
            events.append(TimelineEvent(now, PICKUP, floor))
            ride_start[boarder] = now
        else:
            destination[leaver] = now - ride_start[leaver]
            now += timing.passenger_load_time_s
            events.append(TimelineEvent(now, DROPOFF, floor))
        now += timing.closing_time_s
        events.append(TimelineEvent(now, DOORS_CLOSE, floor))
        if k != last:
            events.append(TimelineEvent(now, DEPART, floor))

    times = tuple(
        PassengerTimes(waiting[i], destination[i], waiting[i] + destination[i])
        for i in range(count)
    )
    return SimulationResult(times, tuple(events))


def exhaustive_best(
    instance: ProblemInstance, max_floors: int = 9
) -> tuple[Route, float]:
    """Best feasible route by full enumeration of every tail permutation.

    Infeasible permutations are skipped, not repaired. Ties go to the
    lexicographically smallest stop sequence. Refuses instances with
    more than max_floors floors; the search space grows factorially.
    """
    floors = instance.num_floors
    if floors > max_floors:
        raise ValueError(
            f"instance too large for exhaustive search ({floors} floors > {max_floors})"
        )
    if not instance.passengers:
        raise ValueError("instance has no passengers")
    head = instance.initial_floor
    others = [f for f in range(floors) if f != head]
    pairs = [(p.call_floor, p.destination_floor) for p in instance.passengers]

    best_fitness: float | None = None
    best_stops: tuple[int, ...] | None = None
    position = [0] * floors
    for tail in itertools.permutations(others):
        for index, floor in enumerate(tail, start=1):
            position[floor] = index
        if any(position[dest] < position[call] for call, dest in pairs):
            continue
        stops = (head,) + tail
        result = simulate_route(Route(stops), instance)
        value = sum(t.journey_s for t in result.passenger_times) / len(pairs)
        if best_fitness is None or value < best_fitness:
            best_fitness = value
            best_stops = stops
    assert best_stops is not None and best_fitness is not None  # feasible space is never empty
    return Route(best_stops), best_fitness
