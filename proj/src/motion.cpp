#include "splitsim/motion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace splitsim {

namespace {
constexpr std::int64_t kMaxDurationSupport = 10'000'000;
}

std::string_view to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::constant: return "constant";
        case ProfileKind::linear: return "linear";
        case ProfileKind::radius: return "radius";
        case ProfileKind::area: return "area";
    }
    return "unknown";
}

ProfileKind parse_profile_kind(std::string_view name) {
    if (name == "constant") return ProfileKind::constant;
    if (name == "linear") return ProfileKind::linear;
    if (name == "radius") return ProfileKind::radius;
    if (name == "area") return ProfileKind::area;
    throw std::invalid_argument("unknown velocity profile '" + std::string(name) +
                                "' (expected constant, linear, radius or area)");
}

double velocity(const VelocityProfile& profile, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("velocity: n must be >= 1");
    const double nd = static_cast<double>(n);
    switch (profile.kind) {
        case ProfileKind::constant: return profile.v0;
        case ProfileKind::linear: return std::max(profile.v0 - profile.gamma * (nd - 1.0), 0.0);
        case ProfileKind::radius: return profile.v0 / std::sqrt(nd);
        case ProfileKind::area: return profile.v0 / nd;
    }
    return 0.0;
}

void WalkParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 2.0)) {
        throw std::invalid_argument("walk.alpha must be in (0, 2]");
    }
    if (!(rho >= 0.0 && rho < 1.0)) throw std::invalid_argument("walk.rho must be in [0, 1)");
    if (!std::isfinite(mu)) throw std::invalid_argument("walk.mu must be finite");
    if (delta_min < 1) throw std::invalid_argument("walk.delta_min must be >= 1");
    if (delta_max < delta_min) throw std::invalid_argument("walk.delta_max must be >= walk.delta_min");
    if (delta_max - delta_min >= kMaxDurationSupport) {
        throw std::invalid_argument("walk.delta_max - walk.delta_min must be < 10000000");
    }
}

StepDurationSampler::StepDurationSampler(const WalkParams& params) : delta_min_(params.delta_min) {
    params.validate();
    const auto count = static_cast<std::size_t>(params.delta_max - params.delta_min + 1);
    cdf_.resize(count);
    double total = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        total += std::pow(static_cast<double>(params.delta_min) + static_cast<double>(k), -(params.alpha + 1.0));
        cdf_[k] = total;
    }
    for (double& c : cdf_) c /= total;
    cdf_.back() = 1.0;
}

std::int64_t StepDurationSampler::sample(Rng& rng) const {
    const double u = uniform01(rng);
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const auto idx = std::min<std::ptrdiff_t>(it - cdf_.begin(), static_cast<std::ptrdiff_t>(cdf_.size()) - 1);
    return delta_min_ + idx;
}

double StepDurationSampler::pmf(std::int64_t delta) const {
    if (delta < delta_min() || delta > delta_max()) return 0.0;
    const auto k = static_cast<std::size_t>(delta - delta_min_);
    return k == 0 ? cdf_[0] : cdf_[k] - cdf_[k - 1];
}

double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(theta + std::numbers::pi, two_pi);
    if (w < 0.0) w += two_pi;
    w -= std::numbers::pi;
    if (w >= std::numbers::pi) w = -std::numbers::pi;
    return w;
}

double wrapped_cauchy_quantile(double u, double mu, double rho) {
    const double scale = (1.0 - rho) / (1.0 + rho);
    return wrap_angle(mu + 2.0 * std::atan(scale * std::tan(std::numbers::pi * (u - 0.5))));
}

double sample_turn_angle(const WalkParams& params, Rng& rng) {
    return wrapped_cauchy_quantile(uniform_open01(rng), params.mu, params.rho);
}

void advance_walker(AgentState& agent, const WalkParams& params,
                    const StepDurationSampler& durations, Rng& rng) {
    if (!agent.alive) return;
    if (agent.remaining_run > 0) --agent.remaining_run;
    if (agent.remaining_run == 0) {
        agent.heading = wrap_angle(agent.heading + sample_turn_angle(params, rng));
        agent.remaining_run = durations.sample(rng);
    }
}

}  // namespace splitsim
