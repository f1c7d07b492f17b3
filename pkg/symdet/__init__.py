"""Exact symbolic determinants: minor expansion, Bareiss, cost model and benchmarks."""

__version__ = "0.1.0"
