// splitsim command-line front end: run sweeps, print rate predictions, and
// evaluate the brute-force reference oracles.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "splitsim/analysis.hpp"
#include "splitsim/config.hpp"
#include "splitsim/oracles.hpp"
#include "splitsim/report.hpp"
#include "splitsim/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

int cmd_run(const std::string& config_path, const std::string& out_dir, int jobs,
            const std::optional<std::uint64_t>& seed, bool csv_only) {
    splitsim::SweepSpec spec;
    try {
        spec = splitsim::parse_config(config_path);
        if (seed) spec.reseed(*seed);
    } catch (const splitsim::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        const std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        std::cerr << "running " << splitsim::enumerate_runs(spec).size() << " runs ("
                  << splitsim::to_string(spec.experiment) << ") with " << jobs << " job(s)\n";
        const auto records = splitsim::run_sweep(spec, {jobs, &std::cerr});

        int failures = 0;
        for (const auto& r : records) {
            if (!r.result) {
                ++failures;
                std::cerr << "run failed: " << splitsim::to_string(r.key.profile) << " n=" << r.key.n
                          << " seed=" << r.key.seed << ": " << r.error << '\n';
            }
        }
        splitsim::write_csv(records, dir / "results.csv");
        if (!csv_only) {
            const auto summary = splitsim::summarize(records);
            splitsim::write_summary_csv(summary, dir / "summary.csv");
            for (const auto& f : splitsim::emit_plots(summary, dir, &std::cerr)) {
                std::cerr << "wrote " << f.string() << '\n';
            }
        }
        std::cerr << "wrote " << (dir / "results.csv").string() << '\n';
        return failures == 0 ? kExitOk : kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_predict(double area, double v0, double gamma, const std::vector<std::int64_t>& n_values) {
    using splitsim::ProfileKind;
    const std::vector<ProfileKind> kinds{ProfileKind::constant, ProfileKind::linear, ProfileKind::radius,
                                         ProfileKind::area};
    std::printf("initial collective coverage rate 2*sqrt(A n / pi)*v(n)  [area/step]\n");
    std::printf("A = %.8g, V0 = %.8g, gamma = %.8g\n\n", area, v0, gamma);
    std::printf("%8s", "n");
    for (auto k : kinds) std::printf(" %14s", std::string(splitsim::to_string(k)).c_str());
    std::printf("\n");
    for (std::int64_t n : n_values) {
        std::printf("%8lld", static_cast<long long>(n));
        for (auto k : kinds) std::printf(" %14.6e", splitsim::initial_rate(k, n, area, v0, gamma));
        std::printf("\n");
    }
    std::printf("\nratio to n = 1\n");
    for (std::int64_t n : n_values) {
        std::printf("%8lld", static_cast<long long>(n));
        for (auto k : kinds) {
            const double base = splitsim::initial_rate(k, 1, area, v0, gamma);
            std::printf(" %14.6f", splitsim::initial_rate(k, n, area, v0, gamma) / base);
        }
        std::printf("\n");
    }
    if (const auto opt = splitsim::optimal_n_linear(v0, gamma)) {
        const auto n_zero = splitsim::linear_zero_velocity_n(v0, gamma);
        std::printf("\nlinear profile: continuous optimum n* = %.6f, best integer n = %lld, v(n) > 0 up to n = %lld\n",
                    *opt, static_cast<long long>(splitsim::best_integer_n_linear(v0, gamma, area, n_zero)),
                    static_cast<long long>(n_zero));
    } else {
        std::printf("\nlinear profile: gamma = 0, rate grows without bound in n\n");
    }
    std::printf("teleport ideal increment (p = 1): %.6f percentage points per round\n",
                splitsim::ideal_teleport_increment(area, 1.0));
    return kExitOk;
}

int cmd_oracle(std::int64_t samples, std::uint64_t seed) {
    namespace o = splitsim::oracle;
    const double r = 0.1;
    std::printf("lens area, r = %.3g (Monte Carlo, %lld samples)\n", r, static_cast<long long>(samples));
    for (double d : {0.0, 0.05, 0.1, 0.15, 0.2}) {
        const auto e = o::lens_area_monte_carlo(d, r, samples, seed);
        std::printf("  d = %.3f  area = %.6f  +- %.6f\n", d, e.value, e.std_error);
    }
    std::printf("cells within r = 0.1 of (0.5, 0.5), m = 1000, p = 1 (all-cell scan): %lld\n",
                static_cast<long long>(o::disk_cell_count_all_cells(0.5, 0.5, 0.1, 1000, 1.0)));
    std::printf("P(delta = 1), alpha = 2 on [1, 10000] (direct sum): %.6f\n", o::power_law_pmf(1, 2.0, 1, 10'000));
    const double k = 0.1 * (1.0 - std::pow(1000.0, -0.1));
    std::printf("survival after 100 steps, k(1000) = %.6f: closed form %.6f, simulated %.6f (1e5 chains)\n", k,
                std::pow(1.0 - k, 100.0), o::bernoulli_survival(k, 100'000, 100, seed));
    const double area = std::numbers::pi * 0.01;
    std::printf("teleport expected coverage (A = pi*0.01, p = 1, n = 1000):\n");
    for (std::int64_t rounds : {0, 1, 5, 10, 20, 50}) {
        std::printf("  after round %lld: %.4f%%\n", static_cast<long long>(rounds),
                    o::teleport_expected_coverage(area, 1.0, 1000, rounds));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"splitsim: coverage simulator for n agents sharing a fixed total footprint"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    int jobs = 1;
    std::optional<std::uint64_t> seed;
    bool csv_only = false;
    auto* run = app.add_subcommand("run", "Run the sweep described by a config file");
    run->add_option("config", config_path, "Config file (splitsim-config v1)")->required();
    run->add_option("--out", out_dir, "Output directory")->capture_default_str();
    run->add_option("--jobs", jobs, "Concurrent runs")->check(CLI::Range(1, 256))->capture_default_str();
    run->add_option("--seed", seed, "Master seed; seeds become seed + 0..count-1");
    run->add_flag("--csv-only", csv_only, "Skip summary and SVG output");

    double area = std::numbers::pi * 0.01;
    double v0 = 0.005;
    double gamma = 4e-6;
    std::vector<std::int64_t> n_values{1, 2, 10, 100, 417, 500, 1000};
    auto* predict = app.add_subcommand("predict", "Print closed-form initial coverage rates and optima");
    predict->add_option("--area", area, "Total footprint A")->capture_default_str();
    predict->add_option("--v0", v0, "Single-agent velocity V0")->capture_default_str();
    predict->add_option("--gamma", gamma, "Linear profile slope")->capture_default_str();
    predict->add_option("--n", n_values, "Group sizes")->capture_default_str();

    std::int64_t samples = 10'000'000;
    std::uint64_t oracle_seed = 12345;
    auto* oracle = app.add_subcommand("oracle", "Evaluate the brute-force reference oracles");
    oracle->add_option("--samples", samples, "Monte Carlo samples")->capture_default_str();
    oracle->add_option("--seed", oracle_seed, "Oracle seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (*run) return cmd_run(config_path, out_dir, jobs, seed, csv_only);
    if (*predict) {
        try {
            return cmd_predict(area, v0, gamma, n_values);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitConfig;
        }
    }
    if (*oracle) return cmd_oracle(samples, oracle_seed);
    return kExitConfig;
}
