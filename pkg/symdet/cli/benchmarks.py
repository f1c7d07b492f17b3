"""`bench-crossover` and `bench-sorting` subcommands."""

from __future__ import annotations

from typing import List

from symdet.bench import (
    SORTING_COLUMNS,
    STAIRCASE_COLUMNS,
    TRIAL_COLUMNS,
    crossover_staircase,
    sorting_study,
    write_csv,
)
from symdet.cli.common import CliConfig, UsageError, add_command, emit_csv, positive_int
from symdet.core.config import COEFF_HI, COEFF_LO, MATRICES_PER_POINT, SORTING_TRIALS, TIME_CEILING_SECS
from symdet.models.schema import SortingParams, StaircaseParams, TrialRecord
from symdet.rowsort import parse_strategies

ALL_STRATEGIES = "sum,sumsq,nonzero,distinct"
DEFAULT_ZERO_PROBS = ",".join(f"{k / 10:.1f}" for k in range(1, 11))


def _add_shared(p) -> None:
    p.add_argument("--coeff-lo", type=int, default=COEFF_LO, help="smallest coefficient")
    p.add_argument("--coeff-hi", type=int, default=COEFF_HI, help="largest coefficient")
    p.add_argument("--jobs", type=positive_int, default=1, help="worker threads (timed sections stay serialized)")
    p.add_argument("--trials-output", default=None, help="also write per-trial records to this CSV")


def register(subparsers, parent) -> None:
    c = add_command(subparsers, "bench-crossover", parent, "Crossover staircase: minor expansion vs Bareiss.")
    c.add_argument("--budget", type=positive_int, default=20, help="number of points to visit")
    c.add_argument("--per-point", type=positive_int, default=MATRICES_PER_POINT,
                   help="matrices per point, median timing (1 = single-matrix mode)")
    c.add_argument("--ceiling-secs", type=float, default=TIME_CEILING_SECS, help="per-trial wall-clock ceiling")
    c.add_argument("--soft-ceiling", action="store_true",
                   help="check the ceiling after each trial instead of killing a worker process")
    c.add_argument("--decide-by", choices=["time", "modeled"], default="time",
                   help="compare wall-clock time or modeled integer operations")
    c.add_argument("--n-start", type=positive_int, default=1, help="starting dimension")
    c.add_argument("--s-start", type=positive_int, default=1, help="starting variable count")
    _add_shared(c)
    c.set_defaults(handler=handle_crossover)

    s = add_command(subparsers, "bench-sorting", parent, "Row-sorting speedup study on sparse matrices.")
    s.add_argument("--trials", type=positive_int, default=SORTING_TRIALS, help="trials per zero probability")
    s.add_argument("--n", type=positive_int, default=9, help="matrix dimension")
    s.add_argument("--s", type=positive_int, default=5, help="number of variables")
    s.add_argument("--max-terms", type=positive_int, default=4, help="max terms per nonzero entry")
    s.add_argument("--zero-probs", default=DEFAULT_ZERO_PROBS, help="comma-separated zero probabilities")
    s.add_argument("--strategies", default=ALL_STRATEGIES,
                   help="comma-separated key or key:direction (bare key = both directions)")
    _add_shared(s)
    s.set_defaults(handler=handle_sorting)


def _write_trials(records: List[TrialRecord], path: str) -> None:
    write_csv([row for rec in records for row in rec.rows()], path, TRIAL_COLUMNS)


def handle_crossover(cfg: CliConfig) -> int:
    args = cfg.args
    params = StaircaseParams(
        budget=args.budget,
        per_point=args.per_point,
        ceiling_secs=args.ceiling_secs,
        seed=cfg.seed,
        n_start=args.n_start,
        s_start=args.s_start,
        coeff_lo=args.coeff_lo,
        coeff_hi=args.coeff_hi,
        decide_by=args.decide_by,
        jobs=args.jobs,
        hard_ceiling=not args.soft_ceiling,
    )
    trials: List[TrialRecord] = []
    points = crossover_staircase(params, trials)
    emit_csv(points, STAIRCASE_COLUMNS, cfg.output)
    if args.trials_output:
        _write_trials(trials, args.trials_output)
    return 0


def handle_sorting(cfg: CliConfig) -> int:
    args = cfg.args
    try:
        zero_probs = [float(t) for t in args.zero_probs.split(",") if t.strip()]
        strategies = parse_strategies(args.strategies)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.max_terms > args.s + 1:
        raise UsageError(f"--max-terms must be at most s+1 = {args.s + 1}")
    params = SortingParams(
        zero_probs=zero_probs,
        trials=args.trials,
        n=args.n,
        s=args.s,
        max_terms=args.max_terms,
        coeff_lo=args.coeff_lo,
        coeff_hi=args.coeff_hi,
        seed=cfg.seed,
        jobs=args.jobs,
    )
    trials: List[TrialRecord] = []
    rows = sorting_study(params, strategies, trials)
    emit_csv(rows, SORTING_COLUMNS, cfg.output)
    if args.trials_output:
        _write_trials(trials, args.trials_output)
    return 0
