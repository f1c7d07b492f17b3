"""
Row-sorting speedup study.

For every zero probability and trial, one sparse matrix is expanded without
sorting and then once per strategy with sorting. The sorted timing includes
the sort itself; the unsorted baseline excludes generation. Each row of the
result averages, over the trials at one p, the time ratio and the modeled
cost ratio (sorted / unsorted).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import pandas as pd

from symdet.bench.constants import EXPERIMENT_SORTING, SORTING_COLUMNS
from symdet.bench.runner import derive_seed, result_hash, run_trials, timed
from symdet.core.errors import ResultMismatch
from symdet.det import CostMeter, minor_expansion
from symdet.matrix import gen_sparse_linear
from symdet.models.schema import ExperimentConfig, SortingParams, SortingRow, TrialRecord
from symdet.rowsort import SortStrategy, sorted_minor_expansion

logger = logging.getLogger(__name__)

BASELINE = "minor"


def cost_ratio(sorted_ops: int, baseline_ops: int) -> Optional[float]:
    """
    Modeled cost of the sorted expansion over the unsorted one.

    0/0 is 1.0. A free baseline against a costly sorted run (a zero first
    row moved down) has no finite ratio: None, and the trial is left out of
    that strategy's mean.
    """
    if baseline_ops:
        return sorted_ops / baseline_ops
    return 1.0 if not sorted_ops else None


def _or_nan(value: Optional[float]) -> float:
    return float("nan") if value is None else value


@dataclass(frozen=True)
class _SortingJob:
    zero_prob: float
    trial: int
    config: ExperimentConfig


def _run_trial(job: _SortingJob, strategies: Sequence[SortStrategy]) -> TrialRecord:
    a = gen_sparse_linear(job.config)
    base_meter = CostMeter()
    det, t_base = timed(minor_expansion, a, base_meter)
    durations: Dict[str, int] = {BASELINE: t_base}
    ops: Dict[str, int] = {BASELINE: base_meter.modeled_int_ops}
    for strategy in strategies:
        meter = CostMeter()
        det_sorted, elapsed = timed(sorted_minor_expansion, a, strategy, meter)
        if det_sorted != det:
            raise ResultMismatch(
                f"p={job.zero_prob} seed={job.config.seed}: {strategy.label} changed the determinant"
            )
        durations[strategy.label] = elapsed
        ops[strategy.label] = meter.modeled_int_ops
    return TrialRecord(
        experiment=EXPERIMENT_SORTING,
        trial=job.trial,
        config=job.config.dict(),
        durations_ns=durations,
        modeled_int_ops=ops,
        result_hash=result_hash(det),
    )


def sorting_study(
    params: SortingParams,
    strategies: Sequence[SortStrategy],
    trial_log: Optional[List[TrialRecord]] = None,
) -> List[SortingRow]:
    if not strategies:
        raise ValueError("sorting study needs at least one strategy")

    jobs: List[_SortingJob] = []
    for p_idx, p in enumerate(params.zero_probs):
        for t in range(params.trials):
            trial = p_idx * params.trials + t
            config = ExperimentConfig(
                n=params.n,
                s=params.s,
                zero_prob=p,
                max_terms=params.max_terms,
                coeff_lo=params.coeff_lo,
                coeff_hi=params.coeff_hi,
                seed=derive_seed(params.seed, trial),
                trials=1,
            )
            jobs.append(_SortingJob(p, trial, config))

    records = run_trials(lambda job: _run_trial(job, strategies), jobs, params.jobs)
    if trial_log is not None:
        trial_log.extend(records)

    samples = []
    for job, rec in zip(jobs, records):
        base_t = max(rec.durations_ns[BASELINE], 1)
        base_ops = rec.modeled_int_ops[BASELINE]
        for strategy in strategies:
            samples.append(
                {
                    "zero_prob": job.zero_prob,
                    "strategy": strategy.key.value,
                    "direction": strategy.direction.value,
                    "time_ratio": rec.durations_ns[strategy.label] / base_t,
                    "cost_ratio": _or_nan(cost_ratio(rec.modeled_int_ops[strategy.label], base_ops)),
                }
            )

    frame = pd.DataFrame(samples)
    summary = (
        frame.groupby(["zero_prob", "strategy", "direction"], sort=False)
        .agg(
            trials=("time_ratio", "size"),
            mean_time_ratio=("time_ratio", "mean"),
            mean_cost_ratio=("cost_ratio", "mean"),
            undefined=("cost_ratio", lambda col: int(col.isna().sum())),
        )
        .reset_index()
    )
    for row in summary.itertuples(index=False):
        logger.info(
            "p=%.2f %s:%s time_ratio=%.3f cost_ratio=%.3f",
            row.zero_prob, row.strategy, row.direction, row.mean_time_ratio, row.mean_cost_ratio,
        )
        if row.undefined:
            logger.warning(
                "p=%.2f %s:%s: %s trial(s) with a free baseline left out of mean_cost_ratio",
                row.zero_prob, row.strategy, row.direction, row.undefined,
            )
    return [
        SortingRow(**{col: getattr(row, col) for col in SORTING_COLUMNS})
        for row in summary.itertuples(index=False)
    ]
