"""Exact enumeration and asymptotics of marked-chord statistics in linear
chord diagrams: counts, distributions, factorial moments, limit densities and
brute-force verification, all exposed from the C++ core."""

from ._core import (
    __version__,
    asymptotic_cdf,
    asymptotic_density,
    at_least_count,
    convergence_table,
    count,
    count_crossings_by_size,
    count_row,
    double_factorial,
    enumerate_counts,
    exact_distribution,
    factorial_moment,
    gf_table,
    mean_variance,
    monte_carlo,
    normal_approx_density,
    size_distribution,
    total_configurations,
)

STATISTICS = ("K", "C", "G", "X")

__all__ = [
    "STATISTICS",
    "__version__",
    "asymptotic_cdf",
    "asymptotic_density",
    "at_least_count",
    "convergence_table",
    "count",
    "count_crossings_by_size",
    "count_row",
    "double_factorial",
    "enumerate_counts",
    "exact_distribution",
    "factorial_moment",
    "gf_table",
    "mean_variance",
    "monte_carlo",
    "normal_approx_density",
    "size_distribution",
    "total_configurations",
]
