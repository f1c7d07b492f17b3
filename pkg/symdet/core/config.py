import os
from dotenv import load_dotenv

# Try to load .env.local if it exists (for local experiments)
# On CI, environment variables should be set directly
try:
    load_dotenv(".env.local")
except Exception:
    pass  # .env.local is optional

# Logging
LOG_LEVEL = os.getenv("SYMDET_LOG_LEVEL", "INFO").upper()

# Default coefficient range for random matrices
COEFF_LO = int(os.getenv("SYMDET_COEFF_LO", "-999"))
COEFF_HI = int(os.getenv("SYMDET_COEFF_HI", "999"))

# Size guards: the largest n each exhaustive computation accepts
MINOR_SIZE_GUARD = int(os.getenv("SYMDET_MINOR_SIZE_GUARD", "16"))
ORACLE_SIZE_GUARD = int(os.getenv("SYMDET_ORACLE_SIZE_GUARD", "6"))
NAIVE_SIZE_GUARD = int(os.getenv("SYMDET_NAIVE_SIZE_GUARD", "7"))

# Benchmark harness
TIME_CEILING_SECS = float(os.getenv("SYMDET_TIME_CEILING_SECS", "60"))
MATRICES_PER_POINT = int(os.getenv("SYMDET_MATRICES_PER_POINT", "3"))
SORTING_TRIALS = int(os.getenv("SYMDET_SORTING_TRIALS", "100"))

# Cost ratio grid defaults
RATIO_GRID_N_MAX = int(os.getenv("SYMDET_RATIO_GRID_N_MAX", "30"))
RATIO_GRID_S_MAX = int(os.getenv("SYMDET_RATIO_GRID_S_MAX", "30"))
