"""Experiment ids and CSV schemas."""

EXPERIMENT_CROSSOVER = "crossover"
EXPERIMENT_SORTING = "sorting"

WINNER_MINOR = "minor"
WINNER_BAREISS = "bareiss"
WINNER_CEILING = "ceiling"

# A hard-ceiling worker is killed after 2 * ceiling + this many seconds:
# both algorithms plus process start-up and matrix generation.
DEADLINE_SLACK_SECS = 5.0

RATIO_COLUMNS = ["n", "s", "log_ratio"]
BOUNDARY_COLUMNS = ["s", "crossover_n"]
STAIRCASE_COLUMNS = [
    "step",
    "n",
    "s",
    "winner",
    "t_minor_ns",
    "t_bareiss_ns",
    "modeled_cm",
    "modeled_cg_meter",
]
SORTING_COLUMNS = [
    "zero_prob",
    "strategy",
    "direction",
    "trials",
    "mean_time_ratio",
    "mean_cost_ratio",
]
TRIAL_COLUMNS = [
    "experiment",
    "trial",
    "config",
    "algorithm",
    "duration_ns",
    "modeled_int_ops",
    "result_hash",
]

# Columns that hold wall-clock measurements; everything else is reproducible.
TIMING_COLUMNS = {"t_minor_ns", "t_bareiss_ns", "mean_time_ratio", "duration_ns"}
