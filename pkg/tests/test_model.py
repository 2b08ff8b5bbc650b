import numpy as np
import pytest

from elevopt import (
    Passenger,
    ProblemInstance,
    Route,
    TimingParams,
    case_study,
    is_feasible,
    validate_instance,
)

from conftest import make_random_instance, random_feasible_route

# Best routes for the bundled case study, one per optimizer, kept as
# regression fixtures.
CASE_STUDY_ROUTES = {
    "sa": (4, 1, 3, 5, 16, 10, 9, 14, 20, 13, 6, 18, 15, 11, 12, 19, 7, 8, 17, 2, 0),
    "ga": (4, 3, 1, 5, 6, 7, 9, 10, 11, 13, 14, 15, 16, 17, 18, 19, 20, 12, 8, 2, 0),
    "pso": (4, 20, 18, 13, 11, 10, 12, 8, 1, 16, 0, 2, 3, 19, 5, 17, 15, 14, 6, 9, 7),
    "woa": (4, 5, 9, 10, 16, 18, 12, 1, 13, 2, 14, 19, 6, 20, 17, 3, 8, 15, 11, 7, 0),
}


class TestTimingParams:
    def test_load_time_default_constants(self):
        assert TimingParams(2, 2, 5, 5).load_time_s == 9

    def test_load_time_zero(self):
        assert TimingParams(0, 0, 0, 0).load_time_s == 0

    def test_load_time_direct_sum(self):
        assert TimingParams(1, 2, 3, 0).load_time_s == 6

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            TimingParams(opening_time_s=-1)


class TestRoute:
    def test_permutation_enforced(self):
        with pytest.raises(ValueError):
            Route((0, 1, 1))
        with pytest.raises(ValueError):
            Route((0, 2, 3))

    def test_sorted_stops_cover_all_floors(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            instance = make_random_instance(rng)
            route = random_feasible_route(rng, instance)
            assert sorted(route.stops) == list(range(instance.num_floors))

    def test_head_and_tail(self):
        route = Route((2, 0, 1))
        assert route.head == 2
        assert route.tail == (0, 1)
        assert len(route) == 3


class TestCaseStudy:
    def test_shape(self):
        instance = case_study()
        assert instance.num_floors == 21
        assert instance.initial_floor == 4
        assert len(instance.passengers) == 10

    def test_exact_passenger_list(self):
        pairs = [(p.call_floor, p.destination_floor) for p in case_study().passengers]
        assert pairs == [
            (5, 9), (6, 7), (3, 15), (11, 0), (20, 8),
            (10, 17), (13, 19), (1, 14), (16, 2), (18, 12),
        ]

    def test_load_time(self):
        assert case_study().timing.load_time_s == 9

    def test_validates_clean(self):
        assert validate_instance(case_study()) == []


class TestValidateInstance:
    def test_call_equals_destination(self):
        instance = ProblemInstance(3, 0, (Passenger(1, 1),))
        assert any("call equals destination" in v for v in validate_instance(instance))

    def test_duplicate_event_floor(self):
        instance = ProblemInstance(3, 1, (Passenger(0, 2), Passenger(2, 0)))
        violations = validate_instance(instance)
        assert any("duplicate event floor" in v for v in violations)

    def test_out_of_range_floor(self):
        instance = ProblemInstance(3, 0, (Passenger(1, 5),))
        assert any("out of range" in v for v in validate_instance(instance))

    def test_event_on_initial_floor(self):
        instance = ProblemInstance(4, 1, (Passenger(1, 2),))
        assert any("equals initial floor" in v for v in validate_instance(instance))

    def test_no_passengers(self):
        instance = ProblemInstance(3, 0, ())
        assert any("no passengers" in v for v in validate_instance(instance))


class TestIsFeasible:
    def test_ordered_pair(self, tiny_instance):
        assert is_feasible(Route((0, 1, 2)), tiny_instance)

    def test_reversed_pair(self, tiny_instance):
        assert not is_feasible(Route((0, 2, 1)), tiny_instance)

    def test_case_study_reference_routes(self, case_instance):
        for stops in CASE_STUDY_ROUTES.values():
            assert is_feasible(Route(stops), case_instance)

    def test_invariant_under_passenger_relabeling(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            instance = make_random_instance(rng)
            route = random_feasible_route(rng, instance)
            shuffled = ProblemInstance(
                instance.num_floors,
                instance.initial_floor,
                tuple(rng.permutation(instance.passengers)),
                instance.timing,
            )
            assert is_feasible(route, instance) == is_feasible(route, shuffled)

    def test_wrong_shape_rejected(self, tiny_instance):
        with pytest.raises(ValueError):
            is_feasible(Route((0, 1)), tiny_instance)
        with pytest.raises(ValueError):
            is_feasible(Route((1, 0, 2)), tiny_instance)
