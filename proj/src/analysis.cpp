#include "splitsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace splitsim {

double initial_rate(ProfileKind kind, std::int64_t n, double total_area, double v0, double gamma) {
    if (n < 1) throw std::invalid_argument("initial_rate: n must be >= 1");
    if (!(total_area > 0.0)) throw std::invalid_argument("initial_rate: total area must be > 0");
    const VelocityProfile profile{kind, v0, gamma};
    return 2.0 * std::sqrt(total_area * static_cast<double>(n) / std::numbers::pi) * velocity(profile, n);
}

std::optional<double> optimal_n_linear(double v0, double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("optimal_n_linear: gamma must be >= 0");
    if (gamma == 0.0) return std::nullopt;
    return (v0 + gamma) / (3.0 * gamma);
}

std::int64_t linear_zero_velocity_n(double v0, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("linear_zero_velocity_n: gamma must be > 0");
    // v(n) > 0  <=>  n < 1 + v0 / gamma
    auto n = static_cast<std::int64_t>(std::ceil(1.0 + v0 / gamma)) - 1;
    while (n >= 1 && velocity({ProfileKind::linear, v0, gamma}, n) <= 0.0) --n;
    return std::max<std::int64_t>(n, 1);
}

std::int64_t best_integer_n_linear(double v0, double gamma, double total_area, std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("best_integer_n_linear: n_max must be >= 1");
    std::int64_t best = 1;
    double best_rate = initial_rate(ProfileKind::linear, 1, total_area, v0, gamma);
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const double rate = initial_rate(ProfileKind::linear, n, total_area, v0, gamma);
        if (rate > best_rate) {
            best_rate = rate;
            best = n;
        }
    }
    return best;
}

double ideal_teleport_increment(double total_area, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("ideal_teleport_increment: p must be > 0");
    if (total_area < 0.0 || total_area >= p * p) {
        throw std::invalid_argument("ideal_teleport_increment: total area must be in [0, p^2)");
    }
    return 100.0 * total_area / (p * p);
}

double expected_survivor_fraction(std::int64_t n, const FailureParams& params, std::int64_t t) {
    if (t < 0) throw std::invalid_argument("expected_survivor_fraction: t must be >= 0");
    return std::pow(1.0 - failure_rate(n, params), static_cast<double>(t));
}

std::vector<RatePrediction> predict_table(const std::vector<ProfileKind>& kinds,
                                          const std::vector<std::int64_t>& n_values,
                                          double total_area, double v0, double gamma) {
    std::vector<RatePrediction> out;
    out.reserve(kinds.size() * n_values.size());
    for (ProfileKind kind : kinds) {
        for (std::int64_t n : n_values) {
            out.push_back({kind, n, initial_rate(kind, n, total_area, v0, gamma)});
        }
    }
    return out;
}

}  // namespace splitsim
