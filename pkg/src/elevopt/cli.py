"""Command-line front end.

Three subcommands: `solve` optimizes one instance with one algorithm,
`compare` benchmarks all four algorithms over repeated seeded runs, and
`oracle` brute-forces the true optimum of a small instance. Instances
come from a JSON file or the bundled case study (--case-study).

Exit codes: 0 success, 2 usage or validation error, 3 I/O failure.

Instance file schema::

    {
      "num_floors": 21,
      "initial_floor": 4,
      "timing": {"opening_s": 2, "closing_s": 2, "load_s": 5, "between_floors_s": 5},
      "passengers": [[5, 9], [6, 7]]
    }
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from importlib import resources
from pathlib import Path

from .algorithms import ALGORITHMS, Params, RunConfig, default_params, run
from .cost import evaluate_all
from .harness import export_convergence, run_comparison
from .model import Passenger, ProblemInstance, TimingParams, case_study, validate_instance
from .simulate import exhaustive_best

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

REPORT_FILENAME = "comparison.json"
CONVERGENCE_FILENAME = "convergence.csv"


def parse_instance(data: dict) -> ProblemInstance:
    """Build a ProblemInstance from decoded instance-file JSON."""
    try:
        timing = data["timing"]
        return ProblemInstance(
            num_floors=int(data["num_floors"]),
            initial_floor=int(data["initial_floor"]),
            passengers=tuple(
                Passenger(int(call), int(dest)) for call, dest in data["passengers"]
            ),
            timing=TimingParams(
                opening_time_s=int(timing["opening_s"]),
                closing_time_s=int(timing["closing_s"]),
                passenger_load_time_s=int(timing["load_s"]),
                between_floors_time_s=int(timing["between_floors_s"]),
            ),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed instance data: {exc}") from exc


def load_instance_file(path) -> ProblemInstance:
    """Read and parse an instance JSON file; OSError passes through untouched."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"instance file is not valid JSON: {exc}") from exc
    return parse_instance(data)


def bundled_case_study_path() -> Path:
    """Location of the case-study instance shipped inside the package."""
    return Path(str(resources.files("elevopt").joinpath("data/case_study.json")))


def _resolve_instance(args) -> tuple[ProblemInstance | None, int]:
    if args.case_study:
        instance = case_study()
    elif args.instance:
        try:
            instance = load_instance_file(args.instance)
        except OSError as exc:
            print(f"error: cannot read instance file: {exc}", file=sys.stderr)
            return None, EXIT_IO
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return None, EXIT_USAGE
    else:
        print("error: provide an instance file or --case-study", file=sys.stderr)
        return None, EXIT_USAGE
    violations = validate_instance(instance)
    if violations:
        for violation in violations:
            print(f"invalid instance: {violation}", file=sys.stderr)
        return None, EXIT_USAGE
    return instance, EXIT_OK


_PARAM_FLAGS = {
    "sa": {
        "t_initial": "initial_temperature",
        "t_final": "final_temperature",
        "cooling": "cooling",
        "moves_per_temperature": "iterations_per_temperature",
    },
    "ga": {
        "population": "population_size",
        "elites": "elite_count",
        "crossovers": "crossover_count",
        "mutants": "mutant_count",
    },
    "pso": {
        "population": "population_size",
        "inertia": "inertia",
        "cognitive": "cognitive",
        "social": "social",
        "v_max": "velocity_clamp",
    },
    "woa": {
        "population": "population_size",
        "spiral": "spiral_constant",
    },
}


def _algorithm_params(args) -> Params:
    overrides = {}
    for flag, field_name in _PARAM_FLAGS[args.algo].items():
        value = getattr(args, flag, None)
        if value is not None:
            overrides[field_name] = value
    if args.algo == "woa" and args.no_local_search:
        overrides["local_search_enabled"] = False
    return replace(default_params(args.algo), **overrides)


def cmd_solve(args) -> int:
    instance, code = _resolve_instance(args)
    if instance is None:
        return code
    try:
        config = RunConfig(
            algorithm=args.algo,
            seed=args.seed,
            max_iterations=args.iterations,
            algorithm_params=_algorithm_params(args),
            target_fitness=args.target_fitness,
            stagnation_window=args.stagnation_window,
        )
        result = run(instance, config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    times = evaluate_all(result.best_route, instance)
    print(f"algorithm: {result.algorithm}")
    print(f"seed: {result.seed}")
    print("route:", " ".join(str(floor) for floor in result.best_route.stops))
    print(
        f"fitness: {result.best_fitness:.6f} s "
        f"(average journey time over {len(times)} passengers)"
    )
    print()
    print("passenger  call  dest  wait_s  dest_s  journey_s")
    for number, (p, t) in enumerate(zip(instance.passengers, times), start=1):
        print(
            f"{number:>9}  {p.call_floor:>4}  {p.destination_floor:>4}"
            f"  {t.waiting_s:>6}  {t.destination_s:>6}  {t.journey_s:>9}"
        )

    if args.out is not None:
        payload = {
            "algorithm": result.algorithm,
            "seed": result.seed,
            "max_iterations": args.iterations,
            "best_fitness": result.best_fitness,
            "best_route": list(result.best_route.stops),
            "history": list(result.history),
            "evaluations": result.evaluations,
            "passengers": [
                {
                    "call": p.call_floor,
                    "dest": p.destination_floor,
                    "waiting_s": t.waiting_s,
                    "destination_s": t.destination_s,
                    "journey_s": t.journey_s,
                }
                for p, t in zip(instance.passengers, times)
            ],
        }
        try:
            Path(args.out).write_text(
                json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
            )
        except OSError as exc:
            print(f"error: cannot write result file: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def cmd_compare(args) -> int:
    if args.runs < 1:
        print("error: --runs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    instance, code = _resolve_instance(args)
    if instance is None:
        return code

    report, results = run_comparison(
        instance, base_seed=args.seed, runs=args.runs, max_iterations=args.iterations
    )
    print(f"{'algorithm':<10}{'avg_best':>14}{'optimal':>14}")
    for entry in report.entries:
        print(
            f"{entry.algorithm:<10}"
            f"{entry.avg_best_fitness:>14.6f}"
            f"{entry.optimal_fitness:>14.6f}"
        )

    if args.out_dir is not None:
        out_dir = Path(args.out_dir)
        payload = {
            "base_seed": report.base_seed,
            "runs": report.runs,
            "max_iterations": args.iterations,
            "algorithms": [
                {
                    "algorithm": entry.algorithm,
                    "seeds": list(entry.seeds),
                    "best_fitnesses": list(entry.best_fitnesses),
                    "avg_best_fitness": entry.avg_best_fitness,
                    "optimal_fitness": entry.optimal_fitness,
                    "best_routes": [
                        list(r.best_route.stops) for r in results[entry.algorithm]
                    ],
                }
                for entry in report.entries
            ],
        }
        ordered_results = [r for name in ALGORITHMS for r in results[name]]
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
            (out_dir / REPORT_FILENAME).write_text(
                json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
            )
            export_convergence(ordered_results, out_dir / CONVERGENCE_FILENAME)
        except OSError as exc:
            print(f"error: cannot write comparison files: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def cmd_oracle(args) -> int:
    instance, code = _resolve_instance(args)
    if instance is None:
        return code
    try:
        route, best = exhaustive_best(instance, max_floors=args.max_floors)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print("route:", " ".join(str(floor) for floor in route.stops))
    print(f"fitness: {best:.6f} s")
    return EXIT_OK


def _add_instance_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("instance", nargs="?", help="path to an instance JSON file")
    parser.add_argument(
        "--case-study",
        action="store_true",
        help="use the bundled 21-floor, 10-passenger benchmark instance",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elevopt",
        description="Optimize single-elevator dispatch routes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="optimize one instance with one algorithm")
    _add_instance_arguments(solve)
    solve.add_argument("--algo", required=True, choices=ALGORITHMS)
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--iterations", type=int, default=100)
    solve.add_argument("--target-fitness", type=float, default=None)
    solve.add_argument("--stagnation-window", type=int, default=None)
    solve.add_argument("--out", type=Path, default=None, help="write the result as JSON")
    tuning = solve.add_argument_group("algorithm parameters")
    tuning.add_argument("--population", type=int, default=None, help="ga/pso/woa population size")
    tuning.add_argument("--t-initial", type=float, default=None, help="sa initial temperature")
    tuning.add_argument("--t-final", type=float, default=None, help="sa final temperature")
    tuning.add_argument("--cooling", type=float, default=None, help="sa geometric cooling factor")
    tuning.add_argument(
        "--moves-per-temperature", type=int, default=None, help="sa proposals per temperature step"
    )
    tuning.add_argument("--elites", type=int, default=None, help="ga elite members per generation")
    tuning.add_argument("--crossovers", type=int, default=None, help="ga crossover children per generation")
    tuning.add_argument("--mutants", type=int, default=None, help="ga mutants per generation")
    tuning.add_argument("--inertia", type=float, default=None, help="pso inertia weight")
    tuning.add_argument("--cognitive", type=float, default=None, help="pso cognitive weight")
    tuning.add_argument("--social", type=float, default=None, help="pso social weight")
    tuning.add_argument("--v-max", type=float, default=None, help="pso velocity clamp")
    tuning.add_argument("--spiral", type=float, default=None, help="woa spiral constant")
    tuning.add_argument(
        "--no-local-search", action="store_true", help="disable woa one-swap local search"
    )
    solve.set_defaults(handler=cmd_solve)

    compare = sub.add_parser(
        "compare", help="benchmark all four algorithms with default parameters"
    )
    _add_instance_arguments(compare)
    compare.add_argument("--runs", type=int, default=5)
    compare.add_argument("--seed", type=int, default=0)
    compare.add_argument("--iterations", type=int, default=100)
    compare.add_argument(
        "--out-dir",
        type=Path,
        default=None,
        help=f"directory for {REPORT_FILENAME} and {CONVERGENCE_FILENAME}",
    )
    compare.set_defaults(handler=cmd_compare)

    oracle = sub.add_parser("oracle", help="exhaustive optimum of a small instance")
    _add_instance_arguments(oracle)
    oracle.add_argument("--max-floors", type=int, default=9)
    oracle.set_defaults(handler=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
