"""Problem definition for single-elevator dispatching.

An instance fixes the building size, the cab's starting floor, the door
and travel timing constants, and the passengers waiting to be served,
each with a call floor and a destination floor. A candidate solution is
a route: a permutation of every floor index, visited in order, whose
first entry is the cab's starting floor. A route is feasible when each
passenger's call floor comes before their destination floor.

All value types are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


class InfeasibleRouteError(ValueError):
    """A destination floor precedes its call floor somewhere in the route."""


@dataclass(frozen=True)
class TimingParams:
    """Door and travel timing constants, in whole seconds."""

    opening_time_s: int = 2
    closing_time_s: int = 2
    passenger_load_time_s: int = 5
    between_floors_time_s: int = 5

    def __post_init__(self) -> None:
        for name, value in (
            ("opening_time_s", self.opening_time_s),
            ("closing_time_s", self.closing_time_s),
            ("passenger_load_time_s", self.passenger_load_time_s),
            ("between_floors_time_s", self.between_floors_time_s),
        ):
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")

    @property
    def load_time_s(self) -> int:
        """Duration of one full stop: doors open, one passenger transfers, doors close."""
        return self.opening_time_s + self.closing_time_s + self.passenger_load_time_s


@dataclass(frozen=True)
class Passenger:
    """A pending request: board at call_floor, leave at destination_floor."""

    call_floor: int
    destination_floor: int


@dataclass(frozen=True)
class ProblemInstance:
    """One dispatching scenario.

    Every call and destination floor must be distinct from all others
    and from the starting floor, so each stop serves exactly one
    boarding or drop-off; run validate_instance to check. Floors with
    no event may exist freely.
    """

    num_floors: int
    initial_floor: int
    passengers: tuple[Passenger, ...]
    timing: TimingParams = TimingParams()

    def __post_init__(self) -> None:
        object.__setattr__(self, "passengers", tuple(self.passengers))


@dataclass(frozen=True)
class Route:
    """A visiting order over all floors; stops[0] is where the cab starts."""

    stops: tuple[int, ...]

    def __post_init__(self) -> None:
        stops = tuple(int(s) for s in self.stops)
        object.__setattr__(self, "stops", stops)
        if sorted(stops) != list(range(len(stops))):
            raise ValueError("stops must be a permutation of 0..F-1")

    def __len__(self) -> int:
        return len(self.stops)

    @property
    def head(self) -> int:
        return self.stops[0]

    @property
    def tail(self) -> tuple[int, ...]:
        """Every stop after the fixed starting floor."""
        return self.stops[1:]


def floor_positions(route: Route, instance: ProblemInstance) -> list[int]:
    """Map floor index to its position in the route, checking shape and head."""
    stops = route.stops
    if len(stops) != instance.num_floors:
        raise ValueError(
            f"route has {len(stops)} stops for a {instance.num_floors}-floor instance"
        )
    if stops[0] != instance.initial_floor:
        raise ValueError(
            f"route must start at floor {instance.initial_floor}, got {stops[0]}"
        )
    positions = [0] * len(stops)
    for index, floor in enumerate(stops):
        positions[floor] = index
    return positions


def is_feasible(route: Route, instance: ProblemInstance) -> bool:
    """True when every passenger's call floor is visited before their destination."""
    positions = floor_positions(route, instance)
    return all(
        positions[p.call_floor] < positions[p.destination_floor]
        for p in instance.passengers
    )


def validate_instance(instance: ProblemInstance) -> list[str]:
    """Collect every violated instance invariant; an empty list means valid."""
    violations: list[str] = []
    floors = instance.num_floors
    if floors < 2:
        violations.append(f"num_floors must be at least 2, got {floors}")
    if not 0 <= instance.initial_floor < max(floors, 1):
        violations.append(f"initial floor {instance.initial_floor} out of range")
    if not instance.passengers:
        violations.append("instance has no passengers")
    for number, p in enumerate(instance.passengers, start=1):
        for role, floor in (("call", p.call_floor), ("destination", p.destination_floor)):
            if not 0 <= floor < floors:
                violations.append(f"passenger {number}: {role} floor {floor} out of range")
        if p.call_floor == p.destination_floor:
            violations.append(f"passenger {number}: call equals destination")
    event_counts: Counter[int] = Counter()
    for p in instance.passengers:
        event_counts[p.call_floor] += 1
        event_counts[p.destination_floor] += 1
    for floor, count in sorted(event_counts.items()):
        if count > 1:
            violations.append(f"duplicate event floor {floor} (used {count} times)")
        if floor == instance.initial_floor:
            violations.append(f"event floor {floor} equals initial floor")
    return violations


def case_study() -> ProblemInstance:
    """The bundled 21-floor benchmark: ten pending passengers, cab starting on floor 4."""
    pairs = (
        (5, 9),
        (6, 7),
        (3, 15),
        (11, 0),
        (20, 8),
        (10, 17),
        (13, 19),
        (1, 14),
        (16, 2),
        (18, 12),
    )
    return ProblemInstance(
        num_floors=21,
        initial_floor=4,
        passengers=tuple(Passenger(call, dest) for call, dest in pairs),
        timing=TimingParams(2, 2, 5, 5),
    )
