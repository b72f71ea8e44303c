#pragma once

// Brute-force reference computations. Nothing here calls into the simulator;
// tests compare the simulator against these.

#include <cstdint>
#include <span>
#include <vector>

namespace splitsim::oracle {

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo area of the intersection of two radius-r disks at distance d,
/// by uniform sampling over the first disk's bounding square.
Estimate lens_area_monte_carlo(double d, double r, std::int64_t samples, std::uint64_t seed);

/// Number of cells of an m x m grid on a p-torus whose centers are within r of (x, y),
/// testing every cell.
std::int64_t disk_cell_count_all_cells(double x, double y, double r, int m, double p);

/// Same scan, returning the sorted flat (row * m + col) indices.
std::vector<std::int64_t> disk_cells_all_cells(double x, double y, double r, int m, double p);

/// P(delta = k) for the power law k^-(alpha+1) on [lo, hi], by direct summation.
double power_law_pmf(std::int64_t k, double alpha, std::int64_t lo, std::int64_t hi);

/// P(delta >= k) for the same law.
double power_law_ccdf(std::int64_t k, double alpha, std::int64_t lo, std::int64_t hi);

/// Fraction of `chains` independent agents still alive after `steps` Bernoulli(k) trials.
double bernoulli_survival(double k, std::int64_t chains, std::int64_t steps, std::uint64_t seed);

/// Expected teleport coverage (percent) after `rounds` re-placements plus the
/// initial placement, for n independent uniform disks of total area A per round.
double teleport_expected_coverage(double total_area, double p, std::int64_t n, std::int64_t rounds);

/// Kolmogorov-Smirnov statistic of samples against Uniform(lo, hi).
double ks_uniform_statistic(std::vector<double> samples, double lo, double hi);

/// Asymptotic KS critical value at significance level 1% for sample size N.
double ks_critical_1pct(std::size_t n);

/// Least-squares slope of log CCDF vs log k over k in [k_lo, k_hi] from integer samples.
double ccdf_loglog_slope(std::span<const std::int64_t> samples, std::int64_t k_lo, std::int64_t k_hi);

}  // namespace splitsim::oracle
