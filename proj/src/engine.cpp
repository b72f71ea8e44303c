#include "splitsim/engine.hpp"

#include <chrono>
#include <cmath>

namespace splitsim {

void SimConfig::validate() const {
    if (!(p > 0.0) || !std::isfinite(p)) throw ConfigError("env.p", "must be finite and > 0");
    if (!(total_area > 0.0)) throw ConfigError("env.total_area", "must be > 0");
    if (!(total_area < p * p)) throw ConfigError("env.total_area", "must be < p^2");
    if (n < 1) throw ConfigError("n", "must be >= 1");
    if (m < 1 || m > 10'000) throw ConfigError("env.m", "must be in [1, 10000]");
    if (!(profile.v0 >= 0.0) || !std::isfinite(profile.v0)) throw ConfigError("velocity.v0", "must be >= 0");
    if (!(profile.gamma >= 0.0) || !std::isfinite(profile.gamma)) {
        throw ConfigError("velocity.gamma", "must be >= 0");
    }
    try {
        walk.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("walk", e.what());
    }
    try {
        collisions.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("collisions", e.what());
    }
    try {
        failures.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("failures", e.what());
    }
    if (max_steps < 0) throw ConfigError("run.max_steps", "must be >= 0");
    if (record_every < 1) throw ConfigError("run.record_every", "must be >= 1");
}

Simulation::Simulation(const SimConfig& config, std::uint64_t seed)
    : config_((config.validate(), config)),
      rng_(make_rng(seed)),
      durations_(config.walk),
      grid_(config.m, config.p),
      radius_(radius_from_split(config.total_area, config.n)),
      base_velocity_(velocity(config.profile, config.n)),
      failure_k_(config.failures.enabled ? failure_rate(config.n, config.failures) : 0.0),
      agents_(static_cast<std::size_t>(config.n)),
      alive_(config.n),
      hash_(config.p, 2.0 * radius_) {
    config_.seed = seed;
    for (AgentState& a : agents_) {
        place_uniform(a);
        a.heading = wrap_angle(-std::numbers::pi + 2.0 * std::numbers::pi * uniform01(rng_));
        a.remaining_run = durations_.sample(rng_);
        a.effective_velocity = base_velocity_;
    }
    for (const AgentState& a : agents_) stamp(a.position);
}

void Simulation::place_uniform(AgentState& agent) {
    const double x = uniform01(rng_) * config_.p;
    const double y = uniform01(rng_) * config_.p;
    agent.position = wrap_position({x, y}, config_.p);
}

std::int64_t Simulation::stamp(Position at) {
    const std::int64_t fresh = grid_.stamp_disk(at, radius_);
    stamped_total_ += fresh;
    return fresh;
}

void Simulation::move_and_stamp(AgentState& agent, double distance) {
    const auto pieces = distance > radius_ ? static_cast<int>(std::ceil(distance / radius_)) : 1;
    const double seg = distance / pieces;
    const double dx = seg * std::cos(agent.heading);
    const double dy = seg * std::sin(agent.heading);
    for (int s = 0; s < pieces; ++s) {
        agent.position = wrap_position({agent.position.x + dx, agent.position.y + dy}, config_.p);
        stamp(agent.position);
    }
}

void Simulation::step() {
    ++t_;
    if (alive_ == 0) return;

    if (failure_k_ > 0.0) alive_ -= apply_failures(agents_, failure_k_, rng_);

    const std::size_t count = agents_.size();
    scratch_factor_.assign(count, 1.0);
    if (config_.collisions.enabled && count > 1) {
        scratch_positions_.resize(count);
        scratch_include_.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            scratch_positions_[i] = agents_[i].position;
            scratch_include_[i] = agents_[i].alive || config_.collisions.failed_obstruct;
        }
        hash_.rebuild(scratch_positions_, scratch_include_);
        std::vector<Position> near;
        const double reach = 2.0 * radius_;
        for (std::size_t i = 0; i < count; ++i) {
            if (!agents_[i].alive) continue;
            near.clear();
            hash_.for_each_candidate(scratch_positions_[i], i, [&](std::size_t j) {
                if (torus_distance(scratch_positions_[i], scratch_positions_[j], config_.p) < reach) {
                    near.push_back(scratch_positions_[j]);
                }
            });
            scratch_factor_[i] =
                collision_velocity_factor(scratch_positions_[i], near, radius_, config_.p, config_.collisions);
        }
    }

    for (std::size_t i = 0; i < count; ++i) {
        AgentState& a = agents_[i];
        if (!a.alive) continue;
        a.effective_velocity = scratch_factor_[i] * base_velocity_;
        if (a.effective_velocity > 0.0) move_and_stamp(a, a.effective_velocity);
    }

    for (AgentState& a : agents_) advance_walker(a, config_.walk, durations_, rng_);
}

void Simulation::teleport_round() {
    ++t_;
    for (AgentState& a : agents_) {
        place_uniform(a);
        stamp(a.position);
    }
}

namespace {

template <class Advance>
RunResult drive(const SimConfig& config, std::uint64_t seed, Advance&& advance) {
    const auto start = std::chrono::steady_clock::now();
    Simulation sim(config, seed);
    RunResult result;
    result.config = sim.config();

    auto record = [&] {
        result.series.samples.push_back({sim.t(), sim.coverage()});
        result.survivors.push_back({sim.t(), sim.alive_count()});
    };

    record();
    if (sim.complete()) result.series.t_f = 0;
    while (!sim.complete() && sim.t() < config.max_steps) {
        advance(sim);
        if (sim.complete()) {
            result.series.t_f = sim.t();
            record();
        } else if (sim.t() % config.record_every == 0 || sim.t() == config.max_steps) {
            record();
        }
    }
    result.steps_executed = sim.t();
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

RunResult run(const SimConfig& config, std::uint64_t seed) {
    if (config.mode != Mode::walk) throw ConfigError("mode", "run() requires walk mode");
    return drive(config, seed, [](Simulation& s) { s.step(); });
}

RunResult run_teleport(const SimConfig& config, std::uint64_t seed) {
    if (config.mode != Mode::teleport) throw ConfigError("mode", "run_teleport() requires teleport mode");
    return drive(config, seed, [](Simulation& s) { s.teleport_round(); });
}

RunResult simulate(const SimConfig& config, std::uint64_t seed) {
    return config.mode == Mode::teleport ? run_teleport(config, seed) : run(config, seed);
}

}  // namespace splitsim
