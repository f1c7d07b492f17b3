"""`det` subcommand: determinant of a matrix file."""

from __future__ import annotations

import sys

from symdet.cli.common import CliConfig, add_command, emit_text
from symdet.det import Algorithm, CostMeter, det_dispatch
from symdet.matrix import load_matrix
from symdet.rowsort import Direction, SortKey, SortStrategy, sort_rows

SORT_NONE = "none"


def register(subparsers, parent) -> None:
    p = add_command(subparsers, "det", parent, "Compute the determinant of a matrix file.")
    p.add_argument("--input", required=True, help="matrix file")
    p.add_argument(
        "--algorithm",
        choices=[a.value for a in Algorithm],
        default=Algorithm.MINOR.value,
        help="determinant algorithm",
    )
    p.add_argument(
        "--sort",
        choices=[SORT_NONE] + [k.value for k in SortKey],
        default=SORT_NONE,
        help="row sort key applied before the algorithm",
    )
    p.add_argument(
        "--direction",
        choices=[d.value for d in Direction],
        default=Direction.ASC.value,
        help="row sort direction",
    )
    p.add_argument("--meter", action="store_true", help="report operation counts on stderr")
    p.set_defaults(handler=handle_det)


def handle_det(cfg: CliConfig) -> int:
    args = cfg.args
    algorithm = Algorithm(args.algorithm)
    matrix = load_matrix(args.input)
    meter = CostMeter() if args.meter else None

    sign = 1
    if args.sort != SORT_NONE:
        matrix, perm = sort_rows(matrix, SortStrategy(SortKey(args.sort), Direction(args.direction)))
        sign = perm.sign
    det = det_dispatch(matrix, algorithm, meter)
    if sign == -1:
        det = -det

    emit_text(f"{det}\n", cfg.output)
    if meter is not None:
        for line in meter.report_lines():
            print(line, file=sys.stderr)
    return 0
