#include "splitsim/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace splitsim::oracle {

Estimate lens_area_monte_carlo(double d, double r, std::int64_t samples, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> coord(-r, r);
    std::int64_t hits = 0;
    const double r2 = r * r;
    for (std::int64_t i = 0; i < samples; ++i) {
        const double x = coord(gen);
        const double y = coord(gen);
        if (x * x + y * y <= r2 && (x - d) * (x - d) + y * y <= r2) ++hits;
    }
    const double box = 4.0 * r * r;
    const double f = static_cast<double>(hits) / static_cast<double>(samples);
    return {box * f, box * std::sqrt(f * (1.0 - f) / static_cast<double>(samples))};
}

std::vector<std::int64_t> disk_cells_all_cells(double x, double y, double r, int m, double p) {
    std::vector<std::int64_t> out;
    for (int row = 0; row < m; ++row) {
        const double cy = (static_cast<double>(row) + 0.5) * p / m;
        double dy = std::fabs(cy - y);
        dy = std::min(dy, p - dy);
        for (int col = 0; col < m; ++col) {
            const double cx = (static_cast<double>(col) + 0.5) * p / m;
            double dx = std::fabs(cx - x);
            dx = std::min(dx, p - dx);
            if (dx * dx + dy * dy <= r * r) out.push_back(static_cast<std::int64_t>(row) * m + col);
        }
    }
    return out;
}

std::int64_t disk_cell_count_all_cells(double x, double y, double r, int m, double p) {
    return static_cast<std::int64_t>(disk_cells_all_cells(x, y, r, m, p).size());
}

double power_law_pmf(std::int64_t k, double alpha, std::int64_t lo, std::int64_t hi) {
    if (k < lo || k > hi) return 0.0;
    double z = 0.0;
    for (std::int64_t j = hi; j >= lo; --j) z += std::pow(static_cast<double>(j), -(alpha + 1.0));
    return std::pow(static_cast<double>(k), -(alpha + 1.0)) / z;
}

double power_law_ccdf(std::int64_t k, double alpha, std::int64_t lo, std::int64_t hi) {
    double z = 0.0;
    double tail = 0.0;
    for (std::int64_t j = hi; j >= lo; --j) {
        const double w = std::pow(static_cast<double>(j), -(alpha + 1.0));
        z += w;
        if (j >= k) tail += w;
    }
    return tail / z;
}

double bernoulli_survival(double k, std::int64_t chains, std::int64_t steps, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::bernoulli_distribution fail(k);
    std::int64_t alive = 0;
    for (std::int64_t c = 0; c < chains; ++c) {
        bool ok = true;
        for (std::int64_t s = 0; s < steps && ok; ++s) ok = !fail(gen);
        alive += ok ? 1 : 0;
    }
    return static_cast<double>(alive) / static_cast<double>(chains);
}

double teleport_expected_coverage(double total_area, double p, std::int64_t n, std::int64_t rounds) {
    const double per_disk = total_area / static_cast<double>(n) / (p * p);
    const double placements = static_cast<double>(n) * static_cast<double>(rounds + 1);
    return 100.0 * (1.0 - std::pow(1.0 - per_disk, placements));
}

double ks_uniform_statistic(std::vector<double> samples, double lo, double hi) {
    std::sort(samples.begin(), samples.end());
    const double count = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = (samples[i] - lo) / (hi - lo);
        d = std::max({d, static_cast<double>(i + 1) / count - f, f - static_cast<double>(i) / count});
    }
    return d;
}

double ks_critical_1pct(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

double ccdf_loglog_slope(std::span<const std::int64_t> samples, std::int64_t k_lo, std::int64_t k_hi) {
    std::map<std::int64_t, std::int64_t> counts;
    for (std::int64_t s : samples) ++counts[s];
    const double total = static_cast<double>(samples.size());
    // Log-spaced evaluation points so the tail is not swamped by small k.
    std::vector<std::int64_t> ks;
    for (double e = std::log10(static_cast<double>(k_lo)); e <= std::log10(static_cast<double>(k_hi)) + 1e-9;
         e += 0.125) {
        const auto k = static_cast<std::int64_t>(std::llround(std::pow(10.0, e)));
        if (ks.empty() || ks.back() != k) ks.push_back(k);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (std::int64_t k : ks) {
        std::int64_t at_least = 0;
        for (auto it = counts.lower_bound(k); it != counts.end(); ++it) at_least += it->second;
        if (at_least == 0) continue;
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(static_cast<double>(at_least) / total);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++used;
    }
    return (used * sxy - sx * sy) / (used * sxx - sx * sx);
}

}  // namespace splitsim::oracle
