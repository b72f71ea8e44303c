#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitsim/coverage.hpp"
#include "splitsim/dynamics.hpp"
#include "splitsim/motion.hpp"
#include "splitsim/rng.hpp"

namespace splitsim {

/// Invalid configuration. `field()` names the offending key.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

enum class Mode { walk, teleport };

struct SimConfig {
    double p = 1.0;
    double total_area = std::numbers::pi * 0.01;
    std::int64_t n = 1;
    int m = 1000;
    VelocityProfile profile;
    WalkParams walk;
    CollisionParams collisions;
    FailureParams failures;
    Mode mode = Mode::walk;
    std::int64_t max_steps = 10'000;  // rounds in teleport mode
    std::int64_t record_every = 1;
    std::uint64_t seed = 0;

    /// Throws ConfigError naming the first invalid field.
    void validate() const;
};

struct SurvivorSample {
    std::int64_t t = 0;
    std::int64_t alive = 0;
};

struct RunResult {
    CoverageSeries series;
    std::vector<SurvivorSample> survivors;
    SimConfig config;
    std::int64_t steps_executed = 0;
    double wall_seconds = 0.0;
};

/// State of one run. Construction places the agents and stamps t = 0.
///
/// Each walk step runs, in order: failure draws, collision factors from the
/// start-of-step positions, movement with stamping (sub-stepped so no single
/// move exceeds r), then turn bookkeeping. All randomness comes from one
/// generator consumed in agent index order.
class Simulation {
public:
    Simulation(const SimConfig& config, std::uint64_t seed);

    void step();
    /// Re-places every agent uniformly at random and stamps once.
    void teleport_round();

    std::int64_t t() const { return t_; }
    double radius() const { return radius_; }
    double base_velocity() const { return base_velocity_; }
    const SimConfig& config() const { return config_; }
    const CoverageGrid& grid() const { return grid_; }
    std::span<const AgentState> agents() const { return agents_; }
    std::int64_t alive_count() const { return alive_; }
    double coverage() const { return coverage_percent(grid_); }
    bool complete() const { return grid_.complete(); }
    /// Sum of newly covered cells over every stamp so far, including t = 0.
    std::int64_t stamped_total() const { return stamped_total_; }

private:
    void place_uniform(AgentState& agent);
    std::int64_t stamp(Position at);
    void move_and_stamp(AgentState& agent, double distance);

    SimConfig config_;
    Rng rng_;
    StepDurationSampler durations_;
    CoverageGrid grid_;
    double radius_;
    double base_velocity_;
    double failure_k_;
    std::vector<AgentState> agents_;
    std::int64_t alive_;
    std::int64_t t_ = 0;
    std::int64_t stamped_total_ = 0;

    SpatialHash hash_;
    std::vector<Position> scratch_positions_;
    std::vector<std::uint8_t> scratch_include_;
    std::vector<double> scratch_factor_;
};

/// Walk-mode run until full coverage or config.max_steps.
RunResult run(const SimConfig& config, std::uint64_t seed);
/// Teleport-mode run until full coverage or config.max_steps rounds.
RunResult run_teleport(const SimConfig& config, std::uint64_t seed);
/// Dispatches on config.mode.
RunResult simulate(const SimConfig& config, std::uint64_t seed);

}  // namespace splitsim
