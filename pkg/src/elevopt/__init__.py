"""Solvers and analysis tools for single-elevator dispatch routing."""

from .algorithms import (
    ALGORITHMS,
    GaParams,
    PsoParams,
    RunConfig,
    RunResult,
    SaParams,
    WoaParams,
    default_params,
    ga_generation,
    geometric_cooling_factor,
    ox_crossover,
    pso_move,
    random_route,
    run,
    run_ga,
    run_pso,
    run_sa,
    run_woa,
    sa_accept,
    swap_mutation,
    woa_exploration,
)
from .cost import (
    PassengerMetrics,
    PassengerTimes,
    evaluate_all,
    evaluate_passenger,
    fitness,
    passenger_metrics,
    repair_route,
)
from .encoding import (
    gvp_decode,
    improve_once,
    local_search_2swap,
    random_swap,
    slot_floors,
    spv_decode,
)
from .harness import (
    AlgorithmComparison,
    ComparisonReport,
    derive_run_seed,
    export_convergence,
    multi_run,
    run_comparison,
)
from .model import (
    InfeasibleRouteError,
    Passenger,
    ProblemInstance,
    Route,
    TimingParams,
    case_study,
    floor_positions,
    is_feasible,
    validate_instance,
)
from .simulate import (
    SimulationResult,
    TimelineEvent,
    exhaustive_best,
    simulate_route,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "AlgorithmComparison",
    "ComparisonReport",
    "GaParams",
    "InfeasibleRouteError",
    "Passenger",
    "PassengerMetrics",
    "PassengerTimes",
    "ProblemInstance",
    "PsoParams",
    "Route",
    "RunConfig",
    "RunResult",
    "SaParams",
    "SimulationResult",
    "TimelineEvent",
    "TimingParams",
    "WoaParams",
    "case_study",
    "default_params",
    "derive_run_seed",
    "evaluate_all",
    "evaluate_passenger",
    "exhaustive_best",
    "export_convergence",
    "fitness",
    "floor_positions",
    "ga_generation",
    "geometric_cooling_factor",
    "gvp_decode",
    "improve_once",
    "is_feasible",
    "local_search_2swap",
    "multi_run",
    "ox_crossover",
    "passenger_metrics",
    "pso_move",
    "random_route",
    "random_swap",
    "repair_route",
    "run",
    "run_comparison",
    "run_ga",
    "run_pso",
    "run_sa",
    "run_woa",
    "sa_accept",
    "simulate_route",
    "slot_floors",
    "spv_decode",
    "swap_mutation",
    "validate_instance",
    "woa_exploration",
]
