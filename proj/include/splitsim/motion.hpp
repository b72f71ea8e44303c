#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "splitsim/geometry.hpp"
#include "splitsim/rng.hpp"

namespace splitsim {

enum class ProfileKind { constant, linear, radius, area };

std::string_view to_string(ProfileKind kind);
/// Throws std::invalid_argument on an unknown name.
ProfileKind parse_profile_kind(std::string_view name);

/// Per-agent speed as a function of group size.
struct VelocityProfile {
    ProfileKind kind = ProfileKind::constant;
    double v0 = 0.005;
    double gamma = 4e-6;  // only read by the linear profile
};

double velocity(const VelocityProfile& profile, std::int64_t n);

struct WalkParams {
    double alpha = 2.0;  // power-law exponent of the straight-run length, in (0, 2]
    double rho = 0.0;    // wrapped Cauchy concentration, in [0, 1)
    double mu = 0.0;     // wrapped Cauchy location
    std::int64_t delta_min = 1;
    std::int64_t delta_max = 10'000;

    void validate() const;
};

struct AgentState {
    Position position;
    double heading = 0.0;          // radians, [-pi, pi)
    std::int64_t remaining_run = 0;  // straight steps left before the next turn
    bool alive = true;
    double effective_velocity = 0.0;
};

/// Discrete power law P(delta) ∝ delta^-(alpha+1) on [delta_min, delta_max],
/// sampled exactly by inverse transform over a precomputed CDF.
class StepDurationSampler {
public:
    explicit StepDurationSampler(const WalkParams& params);

    std::int64_t sample(Rng& rng) const;
    std::int64_t delta_min() const { return delta_min_; }
    std::int64_t delta_max() const { return delta_min_ + static_cast<std::int64_t>(cdf_.size()) - 1; }
    /// Probability of exactly `delta` steps under the sampled law.
    double pmf(std::int64_t delta) const;

private:
    std::int64_t delta_min_;
    std::vector<double> cdf_;
};

inline std::int64_t sample_step_duration(const StepDurationSampler& sampler, Rng& rng) {
    return sampler.sample(rng);
}

/// Wraps an angle into [-pi, pi).
double wrap_angle(double theta);

/// Inverse CDF of the wrapped Cauchy law evaluated at u in (0, 1).
double wrapped_cauchy_quantile(double u, double mu, double rho);

double sample_turn_angle(const WalkParams& params, Rng& rng);

/// Straight-run bookkeeping after a movement step: counts the run down and,
/// once it is exhausted, turns by a wrapped Cauchy angle and draws a new run.
void advance_walker(AgentState& agent, const WalkParams& params,
                    const StepDurationSampler& durations, Rng& rng);

}  // namespace splitsim
