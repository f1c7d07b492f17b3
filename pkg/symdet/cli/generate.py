"""`gen` subcommand: a random matrix in the matrix text format."""

from __future__ import annotations

import logging

from symdet.cli.common import CliConfig, UsageError, add_command, emit_text, positive_int, probability
from symdet.core.config import COEFF_HI, COEFF_LO
from symdet.matrix import format_matrix, gen_one_homogeneous, gen_sparse_linear
from symdet.models.schema import ExperimentConfig

logger = logging.getLogger(__name__)

DIST_ONE_HOMOG = "one-homog"
DIST_SPARSE_LINEAR = "sparse-linear"


def register(subparsers, parent) -> None:
    p = add_command(subparsers, "gen", parent, "Generate a random polynomial matrix.")
    p.add_argument("--n", type=positive_int, default=4, help="matrix dimension")
    p.add_argument("--s", type=positive_int, default=3, help="number of variables")
    p.add_argument(
        "--dist",
        choices=[DIST_ONE_HOMOG, DIST_SPARSE_LINEAR],
        default=DIST_SPARSE_LINEAR,
        help="entry distribution",
    )
    p.add_argument("--zero-prob", type=probability, default=0.0, help="sparse-linear: P(entry = 0)")
    p.add_argument("--max-terms", type=positive_int, default=4, help="sparse-linear: max terms per entry")
    p.add_argument("--coeff-lo", type=int, default=COEFF_LO, help="smallest coefficient")
    p.add_argument("--coeff-hi", type=int, default=COEFF_HI, help="largest coefficient")
    p.set_defaults(handler=handle_gen)


def handle_gen(cfg: CliConfig) -> int:
    args = cfg.args
    config = ExperimentConfig(
        n=args.n,
        s=args.s,
        zero_prob=args.zero_prob,
        max_terms=args.max_terms,
        coeff_lo=args.coeff_lo,
        coeff_hi=args.coeff_hi,
        seed=cfg.seed,
    )
    if config.coeff_lo == config.coeff_hi == 0:
        raise UsageError("coefficient range [0, 0] has no nonzero value")
    if args.dist == DIST_ONE_HOMOG:
        matrix = gen_one_homogeneous(config.n, config.s, config.coeff_lo, config.coeff_hi, config.seed)
    else:
        if config.max_terms > config.s + 1:
            raise UsageError(f"--max-terms must be at most s+1 = {config.s + 1}")
        matrix = gen_sparse_linear(config)
    logger.debug("Generated %s matrix n=%s s=%s seed=%s", args.dist, config.n, config.s, config.seed)
    emit_text(format_matrix(matrix), cfg.output)
    return 0
