#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "splitsim/config.hpp"
#include "splitsim/engine.hpp"

namespace splitsim {

struct RunKey {
    Experiment experiment = Experiment::full_coverage;
    ProfileKind profile = ProfileKind::constant;
    std::int64_t n = 1;
    std::uint64_t seed = 0;
};

struct RunRecord {
    RunKey key;
    std::optional<RunResult> result;
    std::string error;  // set when the run threw
};

struct SweepOptions {
    int jobs = 1;
    std::ostream* progress = nullptr;
};

/// All combinations in output order: profile, then n, then seed, as listed in the SweepSpec.
std::vector<RunKey> enumerate_runs(const SweepSpec& spec);

SimConfig config_for(const SweepSpec& spec, const RunKey& key);

/// Executes every run. Records come back in enumerate_runs order whatever the
/// job count; a failing run is reported in its record and the rest still run.
std::vector<RunRecord> run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

}  // namespace splitsim
