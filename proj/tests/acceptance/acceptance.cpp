// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Usage: splitsim_acceptance [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "splitsim/analysis.hpp"
#include "splitsim/config.hpp"
#include "splitsim/coverage.hpp"
#include "splitsim/geometry.hpp"
#include "splitsim/motion.hpp"
#include "splitsim/oracles.hpp"
#include "splitsim/report.hpp"
#include "splitsim/sweep.hpp"

using namespace splitsim;

namespace {

constexpr double kA = std::numbers::pi * 0.01;
constexpr double kV0 = 0.005;
constexpr double kGamma = 4e-6;
const std::vector<std::int64_t> kNs{1, 2, 10, 100, 500, 1000};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::vector<std::uint64_t> seeds(int count) {
    std::vector<std::uint64_t> s(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) s[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i);
    return s;
}

// Mean curve per (profile, n): t -> mean coverage.
using Curves = std::map<std::pair<ProfileKind, std::int64_t>, std::map<std::int64_t, double>>;

Curves mean_curves(const SweepSpec& spec) {
    const auto records = run_sweep(spec, {jobs(), nullptr});
    for (const auto& r : records) {
        if (!r.result) throw std::runtime_error("run failed: " + r.error);
    }
    Curves out;
    for (const auto& row : summarize(records)) out[{row.profile, row.n}][row.t] = row.mean;
    return out;
}

SweepSpec walk_spec(std::vector<ProfileKind> profiles, std::vector<std::int64_t> ns, int seed_count,
                    std::int64_t max_steps) {
    SweepSpec spec = default_spec(Experiment::full_coverage);
    spec.profiles = std::move(profiles);
    spec.n_values = std::move(ns);
    spec.seeds = seeds(seed_count);
    spec.base.m = 1000;
    spec.base.max_steps = max_steps;
    spec.base.record_every = 1;
    return spec;
}

double at(const std::map<std::int64_t, double>& curve, std::int64_t t) {
    auto it = curve.upper_bound(t);
    return std::prev(it)->second;  // summaries carry completed runs forward
}

Outcome criterion1() {
    const double n_star = *optimal_n_linear(kV0, kGamma);
    const std::int64_t scan = best_integer_n_linear(kV0, kGamma, kA, 10'000);
    const bool ok = std::fabs(n_star - 417.0) <= 417.0 * 1e-12 && scan == 417;
    return {ok, fmt("closed form %.12f, integer scan argmax %lld", n_star, static_cast<long long>(scan))};
}

Outcome criterion2() {
    double worst = 0.0;
    const double c1 = initial_rate(ProfileKind::constant, 1, kA, kV0, kGamma);
    const double r1 = initial_rate(ProfileKind::radius, 1, kA, kV0, kGamma);
    const double a1 = initial_rate(ProfileKind::area, 1, kA, kV0, kGamma);
    const double k = 2.0 * std::sqrt(kA / std::numbers::pi);
    for (std::int64_t n = 1; n <= 10'000; ++n) {
        const double nd = static_cast<double>(n);
        const double sn = std::sqrt(nd);
        worst = std::max(worst, std::fabs(initial_rate(ProfileKind::constant, n, kA, kV0, kGamma) / c1 / sn - 1.0));
        worst = std::max(worst, std::fabs(initial_rate(ProfileKind::radius, n, kA, kV0, kGamma) / r1 - 1.0));
        worst = std::max(worst, std::fabs(initial_rate(ProfileKind::area, n, kA, kV0, kGamma) / a1 * sn - 1.0));
        const double lin = k * (sn * (kV0 + kGamma) - kGamma * nd * sn);
        const double got = initial_rate(ProfileKind::linear, n, kA, kV0, kGamma);
        if (lin > 0.0) {
            worst = std::max(worst, std::fabs(got / lin - 1.0));
        } else if (got != 0.0) {
            worst = 1.0;  // beyond the zero-velocity point the closed form goes negative; the rate clamps at 0
        }
    }
    return {worst <= 1e-12, fmt("max relative deviation %.3e over n = 1..10000", worst)};
}

Outcome criterion3() {
    const auto curves = mean_curves(walk_spec({ProfileKind::constant}, {1, 100}, 10, 20));
    const auto& c1 = curves.at({ProfileKind::constant, 1});
    const auto& c100 = curves.at({ProfileKind::constant, 100});
    const double ratio = (at(c100, 20) - at(c100, 0)) / (at(c1, 20) - at(c1, 0));
    return {ratio >= 8.0 && ratio <= 12.0, fmt("gain ratio n=100 / n=1 at step 20 = %.3f (want [8, 12])", ratio)};
}

Outcome criterion4() {
    const std::vector<ProfileKind> kinds{ProfileKind::constant, ProfileKind::linear, ProfileKind::radius,
                                         ProfileKind::area};
    const auto curves = mean_curves(walk_spec(kinds, kNs, 10, 100));
    std::map<ProfileKind, std::vector<double>> c;
    for (auto kind : kinds) {
        for (auto n : kNs) c[kind].push_back(at(curves.at({kind, n}), 100));
    }
    std::ostringstream d;
    for (auto kind : kinds) {
        d << to_string(kind) << '[';
        for (std::size_t i = 0; i < kNs.size(); ++i) d << (i ? " " : "") << fmt("%.2f", c[kind][i]);
        d << "] ";
    }
    const auto& con = c[ProfileKind::constant];
    const bool a = std::is_sorted(con.begin(), con.end(), std::less_equal<>{}) &&
                   std::adjacent_find(con.begin(), con.end()) == con.end();
    const auto& lin = c[ProfileKind::linear];
    // indices in kNs: 1->0, 2->1, 10->2, 100->3, 500->4, 1000->5
    const bool b = lin[4] > lin[3] && lin[3] > lin[5] && lin[5] > lin[2] && lin[2] > lin[1] && lin[1] > lin[0];
    const auto& rad = c[ProfileKind::radius];
    const double rmean = std::accumulate(rad.begin(), rad.end(), 0.0) / static_cast<double>(rad.size());
    const double spread = (*std::max_element(rad.begin(), rad.end()) - *std::min_element(rad.begin(), rad.end())) / rmean;
    const bool cc = spread <= 0.10;
    const auto& area = c[ProfileKind::area];
    bool dd = true;
    for (std::size_t i = 1; i < area.size(); ++i) dd = dd && area[i] < area[i - 1];
    d << fmt("| constant increasing %s, linear order %s, radius spread %.1f%% %s, area decreasing %s",
             a ? "yes" : "NO", b ? "yes" : "NO", 100.0 * spread, cc ? "ok" : "TOO LARGE", dd ? "yes" : "NO");
    return {a && b && cc && dd, d.str()};
}

Outcome criterion5() {
    SweepSpec spec = default_spec(Experiment::teleport);
    spec.n_values = {1, 1000};
    spec.seeds = seeds(30);
    spec.base.m = 2000;
    spec.base.max_steps = 60;
    const auto curves = mean_curves(spec);
    const auto& c1 = curves.at({ProfileKind::constant, 1});
    const auto& c1000 = curves.at({ProfileKind::constant, 1000});
    double worst = 0.0;
    std::int64_t last_round = 0;
    for (const auto& [t, v] : c1) {
        const double w = at(c1000, t);
        if (v > 80.0 || w > 80.0) break;
        worst = std::max(worst, std::fabs(v - w));
        last_round = t;
    }
    const double ideal = ideal_teleport_increment(kA, 1.0);
    const double inc1 = at(c1, 1) - at(c1, 0);
    const double inc1000 = at(c1000, 1) - at(c1000, 0);
    const auto in_band = [&](double inc) { return inc >= 0.9 * ideal - 0.1 && inc <= ideal + 0.1; };
    const bool ok = worst < 2.0 && last_round > 0 && in_band(inc1) && in_band(inc1000);
    return {ok, fmt("max |c_1 - c_1000| = %.3f pp over rounds 0..%lld (want < 2); round-1 increments %.3f, %.3f "
                    "(want [%.3f, %.3f])",
                    worst, static_cast<long long>(last_round), inc1, inc1000, 0.9 * ideal - 0.1, ideal + 0.1)};
}

Outcome criterion6() {
    auto off = walk_spec({ProfileKind::constant}, {2, 100, 1000}, 10, 10'000);
    auto on = off;
    on.base.collisions.enabled = true;
    const auto c_off = mean_curves(off);
    const auto c_on = mean_curves(on);
    bool ok = true;
    std::ostringstream d;
    for (std::int64_t n : {2, 100, 1000}) {
        const auto& a = c_off.at({ProfileKind::constant, n});
        const auto& b = c_on.at({ProfileKind::constant, n});
        double worst = 0.0;
        std::int64_t worst_t = 0;
        std::set<std::int64_t> ts;
        for (const auto& kv : a) ts.insert(kv.first);
        for (const auto& kv : b) ts.insert(kv.first);
        for (std::int64_t t : ts) {
            const double g = std::fabs(at(a, t) - at(b, t));
            if (g > worst) worst = g, worst_t = t;
        }
        ok = ok && worst < 3.0;
        d << fmt("n=%lld max gap %.2f pp at t=%lld; ", static_cast<long long>(n), worst,
                 static_cast<long long>(worst_t));
    }
    d << "(want < 3)";
    return {ok, d.str()};
}

Outcome criterion7() {
    auto base = walk_spec({ProfileKind::constant}, kNs, 10, 10'000);
    base.base.failures.enabled = true;
    base.base.failures.beta = 0.1;

    auto single = walk_spec({ProfileKind::constant}, {1}, 10, 10'000);  // fault-free reference
    const auto ref = mean_curves(single).at({ProfileKind::constant, 1});

    auto mild = base;
    mild.n_values = {1000};
    mild.base.failures.alpha = 0.01;
    const auto big = mean_curves(mild).at({ProfileKind::constant, 1000});
    double min_margin = 1e9;
    for (std::int64_t t = 500; t <= 5000; ++t) min_margin = std::min(min_margin, at(big, t) - at(ref, t));
    const bool a = min_margin > 0.0;

    auto harsh = base;
    harsh.n_values = {2, 10, 100, 500, 1000};
    harsh.base.failures.alpha = 0.1;
    const auto groups = mean_curves(harsh);
    const double single_end = at(ref, 10'000);
    double best_group = 0.0;
    for (std::int64_t n : harsh.n_values) {
        best_group = std::max(best_group, at(groups.at({ProfileKind::constant, n}), 10'000));
    }
    const bool b = single_end > best_group;
    return {a && b, fmt("(a) alpha=0.01: min over t in [500, 5000] of c_1000 - c_single = %.2f pp; "
                        "(b) alpha=0.1: single %.2f%% vs best group %.2f%% at t=10000",
                        min_margin, single_end, best_group)};
}

Outcome criterion8() {
    FailureParams f;
    f.beta = 0.1;
    f.alpha = 0.1;
    const double k1 = failure_rate(1000, f);
    f.alpha = 0.01;
    const double k2 = failure_rate(1000, f);
    const double k0 = failure_rate(1, f);
    const bool in_window = k1 > 0.0499 && k1 < 0.0500;
    const bool ok = in_window && k1 <= 0.05 && k2 < 0.007 && k0 == 0.0;
    return {ok, fmt("k(1000; 0.1, 0.1) = %.7f (window (0.0499, 0.0500) %s, <= 0.05 %s); k(1000; 0.1, 0.01) = %.7f; "
                    "k(1) = %g",
                    k1, in_window ? "ok" : "MISSED", k1 <= 0.05 ? "ok" : "NO", k2, k0)};
}

Outcome criterion9() {
    std::mt19937_64 gen(20240917);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    int stamp_mismatch = 0;
    for (int i = 0; i < 50; ++i) {
        const int m = 1 + static_cast<int>(u(gen) * 200);
        const double r = 0.005 + 0.3 * u(gen);
        const Position c{u(gen), u(gen)};
        CoverageGrid grid(m, 1.0);
        if (grid.stamp_disk(c, r) != oracle::disk_cell_count_all_cells(c.x, c.y, r, m, 1.0)) ++stamp_mismatch;
    }

    int lens_outside = 0;
    double worst_z = 0.0;
    const double r = 0.1;
    for (int i = 0; i < 20; ++i) {
        const double d = 2.0 * r * u(gen);
        const auto est = oracle::lens_area_monte_carlo(d, r, 1'000'000, 1000 + static_cast<std::uint64_t>(i));
        const double diff = std::fabs(disk_overlap_area(d, r) - est.value);
        const double z = est.std_error > 0 ? diff / est.std_error : (diff == 0 ? 0.0 : 1e9);
        worst_z = std::max(worst_z, z);
        if (z > 3.0) ++lens_outside;
    }

    WalkParams w;
    Rng rng = make_rng(77);
    std::vector<double> angles(100'000);
    for (double& a : angles) a = sample_turn_angle(w, rng);
    const double ks = oracle::ks_uniform_statistic(angles, -std::numbers::pi, std::numbers::pi);
    const double ks_crit = oracle::ks_critical_1pct(angles.size());

    const StepDurationSampler durations(w);
    std::vector<std::int64_t> runs(10'000'000);
    for (auto& x : runs) x = durations.sample(rng);
    const double slope = oracle::ccdf_loglog_slope(runs, 5, 100);

    const bool ok = stamp_mismatch == 0 && lens_outside == 0 && ks < ks_crit && std::fabs(slope + 2.0) <= 0.1;
    return {ok, fmt("(a) stamp mismatches %d/50; (b) lens outside 3 se %d/20 (worst %.2f se); "
                    "(c) KS D = %.5f vs %.5f; (d) CCDF slope %.4f",
                    stamp_mismatch, lens_outside, worst_z, ks, ks_crit, slope)};
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome criterion10() {
#ifdef SPLITSIM_CLI_PATH
    namespace fs = std::filesystem;
    const fs::path work = fs::current_path() / "acceptance_determinism";
    fs::remove_all(work);
    std::string bodies[2];
    const int job_counts[2] = {1, 8};
    for (int i = 0; i < 2; ++i) {
        const fs::path out = work / ("jobs" + std::to_string(job_counts[i]));
        const std::string cmd = std::string("\"") + SPLITSIM_CLI_PATH + "\" run \"" + SPLITSIM_DETERMINISM_CFG +
                                "\" --csv-only --jobs " + std::to_string(job_counts[i]) + " --out \"" +
                                out.string() + "\" 2>/dev/null";
        const int rc = std::system(cmd.c_str());
        if (rc != 0) return {false, fmt("CLI exited with status %d for --jobs %d", rc, job_counts[i])};
        bodies[i] = read_file(out / "results.csv");
    }
    const bool ok = !bodies[0].empty() && bodies[0] == bodies[1];
    return {ok, fmt("results.csv %zu bytes, --jobs 1 vs --jobs 8 %s", bodies[0].size(),
                    ok ? "byte-identical" : "DIFFER")};
#else
    const auto spec = parse_config_text("n_values = 1, 10, 100\nprofiles = constant, linear\nseeds.count = 3\n"
                                        "env.m = 200\ncollisions.enabled = true\nfailures.enabled = true\n"
                                        "run.max_steps = 300\nrun.record_every = 10\n");
    std::ostringstream a, b;
    write_csv(run_sweep(spec, {1, nullptr}), a);
    write_csv(run_sweep(spec, {8, nullptr}), b);
    const bool ok = a.str() == b.str();
    return {ok, fmt("in-process CSV %zu bytes, jobs 1 vs 8 %s", a.str().size(), ok ? "byte-identical" : "DIFFER")};
#endif
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"analytical optimum n* = 417", criterion1},
        {"rate ratio laws", criterion2},
        {"early-time gain ratio", criterion3},
        {"step-100 rankings", criterion4},
        {"teleport curves independent of n", criterion5},
        {"collisions barely change coverage", criterion6},
        {"failures: groups vs single agent", criterion7},
        {"failure-rate values", criterion8},
        {"oracle equivalence", criterion9},
        {"CSV identical across job counts", criterion10},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.contains(id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2d: %s | %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d failed\n", failed);
    return failed == 0 ? 0 : 1;
}
