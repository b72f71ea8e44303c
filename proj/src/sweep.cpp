#include "splitsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <ostream>
#include <thread>

namespace splitsim {

std::vector<RunKey> enumerate_runs(const SweepSpec& spec) {
    std::vector<RunKey> keys;
    keys.reserve(spec.profiles.size() * spec.n_values.size() * spec.seeds.size());
    for (ProfileKind profile : spec.profiles) {
        for (std::int64_t n : spec.n_values) {
            for (std::uint64_t seed : spec.seeds) keys.push_back({spec.experiment, profile, n, seed});
        }
    }
    return keys;
}

SimConfig config_for(const SweepSpec& spec, const RunKey& key) {
    SimConfig cfg = spec.base;
    cfg.profile.kind = key.profile;
    cfg.n = key.n;
    cfg.seed = key.seed;
    return cfg;
}

std::vector<RunRecord> run_sweep(const SweepSpec& spec, const SweepOptions& options) {
    const auto keys = enumerate_runs(spec);
    std::vector<RunRecord> records(keys.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> finished{0};
    std::mutex progress_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < keys.size(); i = next++) {
            RunRecord& rec = records[i];
            rec.key = keys[i];
            try {
                rec.result = simulate(config_for(spec, rec.key), rec.key.seed);
            } catch (const std::exception& e) {
                rec.error = e.what();
            }
            const std::size_t done = ++finished;
            if (options.progress) {
                std::lock_guard lock(progress_mutex);
                *options.progress << '[' << done << '/' << keys.size() << "] " << to_string(rec.key.experiment)
                                  << ' ' << to_string(rec.key.profile) << " n=" << rec.key.n
                                  << " seed=" << rec.key.seed;
                if (rec.result) {
                    *options.progress << " c=" << rec.result->series.samples.back().coverage << "% in "
                                      << rec.result->wall_seconds << "s";
                } else {
                    *options.progress << " ERROR: " << rec.error;
                }
                *options.progress << '\n';
            }
        }
    };

    const int jobs = std::clamp(options.jobs, 1, 256);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return records;
}

}  // namespace splitsim
