"""Closed-form per-passenger timing model and the route fitness.

Walking the route in order, the cab pays a fixed time per floor of
travel and one full stop (doors open, one passenger transfers, doors
close) at every floor that hosts a boarding or drop-off. A passenger's
waiting time runs from the start until their doors finish opening at
the call floor; their destination time runs from the end of their own
boarding until the doors finish opening at their destination. Fitness
is the average journey (waiting + destination) time over all
passengers; lower is better.

All times are exact integer seconds; only the final average is a float.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import InfeasibleRouteError, ProblemInstance, Route, floor_positions


@dataclass(frozen=True)
class PassengerMetrics:
    """Route-dependent counts that feed one passenger's timing."""

    n1_floors: int  # cab travel distance from the start to the pickup
    n2_floors: int  # cab travel distance from the pickup to the drop-off
    calls_before: int  # other boardings served before this pickup
    drops_before_pickup: int  # other drop-offs served before this pickup
    calls_during: int  # other boardings served during this ride
    drops_during: int  # other drop-offs served during this ride


@dataclass(frozen=True)
class PassengerTimes:
    """Waiting, ride, and total journey durations for one passenger, in seconds."""

    waiting_s: int
    destination_s: int
    journey_s: int


def _event_positions(
    route: Route, instance: ProblemInstance
) -> tuple[list[int], list[int]]:
    """Positions of every call and destination floor; rejects infeasible routes."""
    positions = floor_positions(route, instance)
    calls = [positions[p.call_floor] for p in instance.passengers]
    drops = [positions[p.destination_floor] for p in instance.passengers]
    for number, (call_at, drop_at) in enumerate(zip(calls, drops), start=1):
        if drop_at < call_at:
            raise InfeasibleRouteError(
                f"precedence violated: passenger {number} would be dropped off "
                "before being picked up"
            )
    return calls, drops


def _travel_prefix(stops: tuple[int, ...]) -> list[int]:
    """prefix[k] = floors traveled from the start through route position k."""
    prefix = [0] * len(stops)
    total = 0
    for k in range(1, len(stops)):
        total += abs(stops[k] - stops[k - 1])
        prefix[k] = total
    return prefix


def _metrics(
    calls: list[int], drops: list[int], prefix: list[int], passenger_index: int
) -> PassengerMetrics:
    call_at = calls[passenger_index]
    drop_at = drops[passenger_index]
    calls_before = drops_before = calls_during = drops_during = 0
    for other in range(len(calls)):
        if other == passenger_index:
            continue
        if calls[other] < call_at:
            calls_before += 1
        elif call_at < calls[other] < drop_at:
            calls_during += 1
        if drops[other] < call_at:
            drops_before += 1
        elif call_at < drops[other] < drop_at:
            drops_during += 1
    return PassengerMetrics(
        n1_floors=prefix[call_at],
        n2_floors=prefix[drop_at] - prefix[call_at],
        calls_before=calls_before,
        drops_before_pickup=drops_before,
        calls_during=calls_during,
        drops_during=drops_during,
    )


def _times(metrics: PassengerMetrics, instance: ProblemInstance) -> PassengerTimes:
    timing = instance.timing
    stop_s = timing.load_time_s
    waiting = (
        timing.between_floors_time_s * metrics.n1_floors
        + stop_s * metrics.calls_before
        + stop_s * metrics.drops_before_pickup
        + timing.opening_time_s
    )
    destination = (
        timing.closing_time_s
        + stop_s * metrics.calls_during
        + timing.between_floors_time_s * metrics.n2_floors
        + stop_s * metrics.drops_during
        + timing.opening_time_s
    )
    return PassengerTimes(waiting, destination, waiting + destination)


def passenger_metrics(
    route: Route, passenger_index: int, instance: ProblemInstance
) -> PassengerMetrics:
    """Travel distances and interleaved-event counts for one passenger."""
    calls, drops = _event_positions(route, instance)
    prefix = _travel_prefix(route.stops)
    return _metrics(calls, drops, prefix, passenger_index)


def evaluate_passenger(
    route: Route, passenger_index: int, instance: ProblemInstance
) -> PassengerTimes:
    """Waiting, ride, and journey seconds for one passenger on this route."""
    return _times(passenger_metrics(route, passenger_index, instance), instance)


def evaluate_all(route: Route, instance: ProblemInstance) -> list[PassengerTimes]:
    """Per-passenger times for the whole instance in passenger order."""
    calls, drops = _event_positions(route, instance)
    prefix = _travel_prefix(route.stops)
    return [
        _times(_metrics(calls, drops, prefix, index), instance)
        for index in range(len(calls))
    ]


def fitness(route: Route, instance: ProblemInstance) -> float:
    """Average journey time in seconds over all passengers; lower is better."""
    if not instance.passengers:
        raise ValueError("instance has no passengers")
    times = evaluate_all(route, instance)
    return sum(t.journey_s for t in times) / len(times)


def repair_route(route: Route, instance: ProblemInstance) -> Route:
    """Swap call/destination positions for any passenger served out of order.

    Event floors are distinct, so each swap touches only that
    passenger's own two positions and a single pass restores
    feasibility. Feasible routes come back unchanged (the same object),
    which makes repair idempotent.
    """
    positions = floor_positions(route, instance)
    stops: list[int] | None = None
    for p in instance.passengers:
        call_at = positions[p.call_floor]
        drop_at = positions[p.destination_floor]
        if drop_at < call_at:
            if stops is None:
                stops = list(route.stops)
            stops[call_at], stops[drop_at] = stops[drop_at], stops[call_at]
            positions[p.call_floor] = drop_at
            positions[p.destination_floor] = call_at
    if stops is None:
        return route
    return Route(tuple(stops))
