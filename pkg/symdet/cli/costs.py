"""`cost`, `ratio-grid` and `boundary` subcommands."""

from __future__ import annotations

from symdet.bench import BOUNDARY_COLUMNS, RATIO_COLUMNS
from symdet.cli.common import CliConfig, UsageError, add_command, emit_csv, emit_text, positive_int
from symdet.core.config import RATIO_GRID_N_MAX, RATIO_GRID_S_MAX
from symdet.costmodel import CostParams, c_g, c_m, c_m_exact, cost_ratio_grid, crossover_n, predicted_boundary
from symdet.matrix import load_matrix
from symdet.models.schema import BoundaryPoint

BOUNDARY_N_CAP = 40


def register(subparsers, parent) -> None:
    p = add_command(subparsers, "cost", parent, "Evaluate the cost model.")
    p.add_argument("--n", type=positive_int, default=None, help="matrix dimension for C_M / C_G")
    p.add_argument("--s", type=positive_int, default=None, help="variable count for C_M / C_G")
    p.add_argument("--input", default=None, help="matrix file for the exact cost C_M(A)")
    p.add_argument(
        "--crossover-cap",
        type=positive_int,
        default=None,
        help="also print the predicted crossover n for --s, scanning up to this n",
    )
    p.set_defaults(handler=handle_cost)

    g = add_command(subparsers, "ratio-grid", parent, "CSV of log(C_M / C_G) over an (n, s) grid.")
    g.add_argument("--n-max", type=int, default=RATIO_GRID_N_MAX, help="largest n (>= 2)")
    g.add_argument("--s-max", type=positive_int, default=RATIO_GRID_S_MAX, help="largest s")
    g.set_defaults(handler=handle_ratio_grid)

    b = add_command(subparsers, "boundary", parent, "CSV of the predicted crossover n for s = 1..s_max.")
    b.add_argument("--s-max", type=positive_int, default=RATIO_GRID_S_MAX, help="largest s")
    b.add_argument("--n-cap", type=positive_int, default=BOUNDARY_N_CAP, help="largest n scanned per s")
    b.set_defaults(handler=handle_boundary)


def handle_cost(cfg: CliConfig) -> int:
    args = cfg.args
    if args.input is None and args.s is None:
        raise UsageError("cost needs --n and --s, or --input")
    if args.n is not None and args.s is None:
        raise UsageError("--n needs --s")
    if args.crossover_cap is not None and args.s is None:
        raise UsageError("--crossover-cap needs --s")

    lines = []
    if args.n is not None:
        params = CostParams(n=args.n, s=args.s)
        lines.append(f"C_M={c_m(params)} C_G={c_g(params)}")
    if args.crossover_cap is not None:
        found = crossover_n(args.s, args.crossover_cap)
        lines.append(f"crossover_n={found if found is not None else 'none'}")
    if args.input is not None:
        lines.append(f"C_M(A)={c_m_exact(load_matrix(args.input))}")
    emit_text("\n".join(lines) + "\n", cfg.output)
    return 0


def handle_ratio_grid(cfg: CliConfig) -> int:
    if cfg.args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    emit_csv(cost_ratio_grid(cfg.args.n_max, cfg.args.s_max), RATIO_COLUMNS, cfg.output)
    return 0


def handle_boundary(cfg: CliConfig) -> int:
    points = [
        BoundaryPoint(s=s, crossover_n=found if found is not None else "none")
        for s, found in predicted_boundary(cfg.args.s_max, cfg.args.n_cap)
    ]
    emit_csv(points, BOUNDARY_COLUMNS, cfg.output)
    return 0
