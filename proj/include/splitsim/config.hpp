#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "splitsim/engine.hpp"

namespace splitsim {

enum class Experiment { teleport, initial_coverage, full_coverage, collisions, failures };

std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view name);

/// One sweep: every (profile, n, seed) combination over a shared base config.
struct SweepSpec {
    Experiment experiment = Experiment::full_coverage;
    SimConfig base;
    std::vector<std::int64_t> n_values;
    std::vector<ProfileKind> profiles;
    std::vector<std::uint64_t> seeds;
    std::uint64_t master_seed = 0;

    /// Replaces the seed list with master + 0 .. count-1, keeping its length.
    void reseed(std::uint64_t master);
};

/// Default sweep for an experiment: p = 1, m = 1000 (2000 for teleport),
/// A = pi 0.01, V0 = 0.005, gamma = 4e-6, Brownian walk, 30 seeds.
SweepSpec default_spec(Experiment experiment);

/// Parses the `splitsim-config v1` key-value format. Throws ConfigError whose
/// field() is the key path (for example "n_values[0]" or "walk.alpha").
SweepSpec parse_config_text(std::string_view text);
SweepSpec parse_config(const std::filesystem::path& path);

}  // namespace splitsim
