import json
from typing import Any, Dict, List, Literal, Union

from pydantic import BaseModel, Field, root_validator, validator

from symdet.core.config import (
    COEFF_HI,
    COEFF_LO,
    MATRICES_PER_POINT,
    SORTING_TRIALS,
    TIME_CEILING_SECS,
)

SEED_LIMIT = 2 ** 64


class ExperimentConfig(BaseModel):
    """Random-matrix distribution plus trial plan."""

    n: int = Field(9, ge=1)
    s: int = Field(5, ge=1)
    zero_prob: float = Field(0.5, ge=0.0, le=1.0)
    max_terms: int = Field(4, ge=1)
    coeff_lo: int = COEFF_LO
    coeff_hi: int = COEFF_HI
    seed: int = Field(0, ge=0, lt=SEED_LIMIT)
    trials: int = Field(1, ge=1)

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _coeff_range_ordered(cls, values):
        if values["coeff_lo"] > values["coeff_hi"]:
            raise ValueError(
                f"coeff_lo ({values['coeff_lo']}) must not exceed coeff_hi ({values['coeff_hi']})"
            )
        return values


class CostParams(BaseModel):
    n: int = Field(..., ge=1)
    s: int = Field(..., ge=1)

    class Config:
        allow_mutation = False


class StaircaseParams(BaseModel):
    budget: int = Field(20, ge=1)
    per_point: int = Field(MATRICES_PER_POINT, ge=1)
    ceiling_secs: float = Field(TIME_CEILING_SECS, gt=0)
    seed: int = Field(0, ge=0, lt=SEED_LIMIT)
    n_start: int = Field(1, ge=1)
    s_start: int = Field(1, ge=1)
    coeff_lo: int = COEFF_LO
    coeff_hi: int = COEFF_HI
    decide_by: Literal["time", "modeled"] = "time"
    jobs: int = Field(1, ge=1)
    hard_ceiling: bool = True

    class Config:
        allow_mutation = False


class SortingParams(BaseModel):
    zero_probs: List[float] = [round(0.1 * k, 1) for k in range(1, 11)]
    trials: int = Field(SORTING_TRIALS, ge=1)
    n: int = Field(9, ge=1)
    s: int = Field(5, ge=1)
    max_terms: int = Field(4, ge=1)
    coeff_lo: int = COEFF_LO
    coeff_hi: int = COEFF_HI
    seed: int = Field(0, ge=0, lt=SEED_LIMIT)
    jobs: int = Field(1, ge=1)

    class Config:
        allow_mutation = False

    @validator("zero_probs")
    def _probabilities(cls, v):
        if not v:
            raise ValueError("zero_probs must not be empty")
        for p in v:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"zero probability {p} outside [0, 1]")
        return v


# Result records; field order is the CSV column order.


class RatioPoint(BaseModel):
    n: int
    s: int
    log_ratio: float


class BoundaryPoint(BaseModel):
    """Predicted crossover n for one s; "none" when none is found up to the cap."""

    s: int
    crossover_n: Union[int, Literal["none"]]


class StaircasePoint(BaseModel):
    step: int
    n: int
    s: int
    winner: str
    t_minor_ns: int
    t_bareiss_ns: int
    modeled_cm: int
    modeled_cg_meter: int


class SortingRow(BaseModel):
    zero_prob: float
    strategy: str
    direction: str
    trials: int
    mean_time_ratio: float
    mean_cost_ratio: float


class TrialRow(BaseModel):
    experiment: str
    trial: int
    config: str
    algorithm: str
    duration_ns: int
    modeled_int_ops: int
    result_hash: str


class TrialRecord(BaseModel):
    """One timed comparison on one matrix; all compared results hash equal."""

    experiment: str
    trial: int
    config: Dict[str, Any]
    durations_ns: Dict[str, int]
    modeled_int_ops: Dict[str, int]
    result_hash: str

    def rows(self) -> List[TrialRow]:
        snapshot = json.dumps(self.config, sort_keys=True)
        return [
            TrialRow(
                experiment=self.experiment,
                trial=self.trial,
                config=snapshot,
                algorithm=name,
                duration_ns=self.durations_ns[name],
                modeled_int_ops=self.modeled_int_ops.get(name, 0),
                result_hash=self.result_hash,
            )
            for name in self.durations_ns
        ]
