"""
Crossover staircase between minor expansion and fraction-free elimination.

Starting at (n_start, s_start), each point times both algorithms on fresh
dense 1-homogeneous matrices. If minor expansion wins, n grows by one;
otherwise s does. The walk ends after ``budget`` points or at the first
trial that runs past the wall-clock ceiling. With ``hard_ceiling`` each
matrix runs in a child process that is killed at the deadline, so a
runaway point cannot stall the walk.
"""

from __future__ import annotations

import logging
import statistics
from dataclasses import dataclass
from typing import List, Optional

from symdet.bench.constants import (
    DEADLINE_SLACK_SECS,
    EXPERIMENT_CROSSOVER,
    WINNER_BAREISS,
    WINNER_CEILING,
    WINNER_MINOR,
)
from symdet.bench.runner import derive_seed, result_hash, run_trials, run_with_deadline, timed
from symdet.core.errors import ResultMismatch, TimeCeilingExceeded
from symdet.det import CostMeter, bareiss, minor_expansion
from symdet.matrix import gen_one_homogeneous
from symdet.models.schema import StaircaseParams, StaircasePoint, TrialRecord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _MatrixJob:
    n: int
    s: int
    trial: int
    seed: int


def _run_matrix(job: _MatrixJob, params: StaircaseParams) -> TrialRecord:
    a = gen_one_homogeneous(job.n, job.s, params.coeff_lo, params.coeff_hi, job.seed)
    minor_meter, bareiss_meter = CostMeter(), CostMeter()
    det_minor, t_minor = timed(minor_expansion, a, minor_meter)
    det_bareiss, t_bareiss = timed(bareiss, a, bareiss_meter)
    if det_minor != det_bareiss:
        raise ResultMismatch(
            f"n={job.n} s={job.s} seed={job.seed}: minor expansion and bareiss disagree"
        )
    return TrialRecord(
        experiment=EXPERIMENT_CROSSOVER,
        trial=job.trial,
        config={"n": job.n, "s": job.s, "seed": job.seed},
        durations_ns={"minor": t_minor, "bareiss": t_bareiss},
        modeled_int_ops={
            "minor": minor_meter.modeled_int_ops,
            "bareiss": bareiss_meter.modeled_int_ops,
        },
        result_hash=result_hash(det_minor),
    )


def _run_job(job: _MatrixJob, params: StaircaseParams, deadline_secs: float) -> Optional[TrialRecord]:
    """None when the worker was killed at the deadline."""
    if not params.hard_ceiling:
        return _run_matrix(job, params)
    try:
        return run_with_deadline(_run_matrix, (job, params), deadline_secs)
    except TimeCeilingExceeded as e:
        logger.warning("n=%s s=%s seed=%s killed: %s", job.n, job.s, job.seed, e)
        return None


def _ceiling_hit(records: List[TrialRecord], ceiling_ns: int) -> Optional[TimeCeilingExceeded]:
    for rec in records:
        slowest = max(rec.durations_ns.values())
        if slowest > ceiling_ns:
            return TimeCeilingExceeded(slowest, ceiling_ns)
    return None


def _median(values: List[int]) -> int:
    return int(statistics.median(values))


def crossover_staircase(
    params: StaircaseParams,
    trial_log: Optional[List[TrialRecord]] = None,
) -> List[StaircasePoint]:
    ceiling_ns = int(params.ceiling_secs * 1e9)
    deadline_secs = 2 * params.ceiling_secs + DEADLINE_SLACK_SECS
    deadline_ns = int(deadline_secs * 1e9)
    n, s = params.n_start, params.s_start
    points: List[StaircasePoint] = []

    for step in range(1, params.budget + 1):
        jobs = [
            _MatrixJob(n, s, trial, derive_seed(params.seed, trial))
            for trial in range((step - 1) * params.per_point, step * params.per_point)
        ]
        results = run_trials(lambda job: _run_job(job, params, deadline_secs), jobs, params.jobs)
        records = [r for r in results if r is not None]
        if trial_log is not None:
            trial_log.extend(records)

        if records:
            t_minor = _median([r.durations_ns["minor"] for r in records])
            t_bareiss = _median([r.durations_ns["bareiss"] for r in records])
            ops_minor = _median([r.modeled_int_ops["minor"] for r in records])
            ops_bareiss = _median([r.modeled_int_ops["bareiss"] for r in records])
        else:
            # Every worker was killed: only the deadline is known.
            t_minor = t_bareiss = deadline_ns
            ops_minor = ops_bareiss = 0

        if len(records) < len(results):
            exceeded: Optional[TimeCeilingExceeded] = TimeCeilingExceeded(deadline_ns, ceiling_ns)
        else:
            exceeded = _ceiling_hit(records, ceiling_ns)
        if exceeded is not None:
            winner = WINNER_CEILING
        elif params.decide_by == "modeled":
            winner = WINNER_MINOR if ops_minor < ops_bareiss else WINNER_BAREISS
        else:
            winner = WINNER_MINOR if t_minor < t_bareiss else WINNER_BAREISS

        points.append(
            StaircasePoint(
                step=step,
                n=n,
                s=s,
                winner=winner,
                t_minor_ns=t_minor,
                t_bareiss_ns=t_bareiss,
                modeled_cm=ops_minor,
                modeled_cg_meter=ops_bareiss,
            )
        )
        logger.info(
            "step %s n=%s s=%s winner=%s t_minor=%.3fms t_bareiss=%.3fms",
            step, n, s, winner, t_minor / 1e6, t_bareiss / 1e6,
        )

        if exceeded is not None:
            logger.warning("Staircase stopped at n=%s s=%s: %s", n, s, exceeded)
            break
        if winner == WINNER_MINOR:
            n += 1
        else:
            s += 1

    return points
