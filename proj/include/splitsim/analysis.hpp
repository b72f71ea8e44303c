#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "splitsim/dynamics.hpp"
#include "splitsim/motion.hpp"

namespace splitsim {

// Early-time collective coverage rate, ignoring overlap between agents:
// n agents of diameter 2r sweeping at v(n) give 2 sqrt(A n / pi) v(n).
// The constant 2 sqrt(A / pi) is kept so rates carry area-per-step units.

struct RatePrediction {
    ProfileKind kind = ProfileKind::constant;
    std::int64_t n = 1;
    double rate = 0.0;  // area per step
};

double initial_rate(ProfileKind kind, std::int64_t n, double total_area, double v0, double gamma);

/// Continuous maximizer of the linear-profile rate, (v0 + gamma) / (3 gamma).
/// Empty when gamma == 0 (the rate grows without bound).
std::optional<double> optimal_n_linear(double v0, double gamma);

/// Largest n with a non-zero linear-profile velocity.
std::int64_t linear_zero_velocity_n(double v0, double gamma);

/// Integer argmax of the linear-profile rate over [1, n_max], by exhaustive scan.
std::int64_t best_integer_n_linear(double v0, double gamma, double total_area, std::int64_t n_max);

/// Coverage gain per teleport round with no revisits: 100 A / p^2 percentage points.
double ideal_teleport_increment(double total_area, double p);

/// Fraction of agents still alive after t steps, (1 - k(n))^t.
double expected_survivor_fraction(std::int64_t n, const FailureParams& params, std::int64_t t);

std::vector<RatePrediction> predict_table(const std::vector<ProfileKind>& kinds,
                                          const std::vector<std::int64_t>& n_values,
                                          double total_area, double v0, double gamma);

}  // namespace splitsim
