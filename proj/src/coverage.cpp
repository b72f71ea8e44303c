#include "splitsim/coverage.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace splitsim {

namespace {

double cell_center(std::int64_t index, int m, double p) {
    return (static_cast<double>(index) + 0.5) * p / m;
}

double axis_gap(double a, double b, double p) {
    const double d = std::fabs(a - b);
    return d > 0.5 * p ? p - d : d;
}

std::int64_t wrap_index(std::int64_t i, int m) {
    const std::int64_t w = i % m;
    return w < 0 ? w + m : w;
}

// Calls emit(row, begin, end) for each maximal half-open column run [begin, end)
// of cells inside the disk. Column candidates come from the analytic chord
// width and are then snapped to the exact inclusion predicate.
template <class Emit>
void for_each_disk_span(Position c, double r, int m, double p, Emit&& emit) {
    const double h = p / m;
    const double r2 = r * r;

    std::int64_t row_lo = static_cast<std::int64_t>(std::floor((c.y - r) / h - 0.5)) - 1;
    std::int64_t row_hi = static_cast<std::int64_t>(std::ceil((c.y + r) / h - 0.5)) + 1;
    if (row_hi - row_lo + 1 >= m) {
        row_lo = 0;
        row_hi = m - 1;
    }

    for (std::int64_t ii = row_lo; ii <= row_hi; ++ii) {
        const int row = static_cast<int>(wrap_index(ii, m));
        const double dy = axis_gap(cell_center(row, m, p), c.y, p);
        const double dy2 = dy * dy;
        if (dy2 > r2) continue;

        auto inside = [&](std::int64_t jj) {
            const double dx = axis_gap(cell_center(wrap_index(jj, m), m, p), c.x, p);
            return dx * dx + dy2 <= r2;
        };

        const double w = std::sqrt(r2 - dy2);
        std::int64_t lo = static_cast<std::int64_t>(std::ceil((c.x - w) / h - 0.5));
        std::int64_t hi = static_cast<std::int64_t>(std::floor((c.x + w) / h - 0.5));

        if (hi - lo + 3 >= m) {
            // Chord spans (nearly) the whole row: test every cell.
            int run_begin = -1;
            for (int j = 0; j < m; ++j) {
                if (inside(j)) {
                    if (run_begin < 0) run_begin = j;
                } else if (run_begin >= 0) {
                    emit(row, run_begin, j);
                    run_begin = -1;
                }
            }
            if (run_begin >= 0) emit(row, run_begin, m);
            continue;
        }

        while (hi - lo + 1 < m - 1 && inside(lo - 1)) --lo;
        while (hi - lo + 1 < m - 1 && inside(hi + 1)) ++hi;
        while (lo <= hi && !inside(lo)) ++lo;
        while (lo <= hi && !inside(hi)) --hi;
        if (lo > hi) continue;

        const auto begin = static_cast<int>(wrap_index(lo, m));
        const auto len = static_cast<int>(hi - lo + 1);
        if (begin + len <= m) {
            emit(row, begin, begin + len);
        } else {
            emit(row, begin, m);
            emit(row, 0, begin + len - m);
        }
    }
}

}  // namespace

std::vector<std::int64_t> cells_in_disk(Position center, double r, int m, double p) {
    if (m < 1 || !(p > 0.0) || !(r > 0.0)) {
        throw std::invalid_argument("cells_in_disk: require m >= 1, p > 0, r > 0");
    }
    std::vector<std::int64_t> out;
    for_each_disk_span(center, r, m, p, [&](int row, int begin, int end) {
        for (int j = begin; j < end; ++j) out.push_back(static_cast<std::int64_t>(row) * m + j);
    });
    return out;
}

CoverageGrid::CoverageGrid(int m, double p)
    : m_(m), p_(p), words_per_row_(m > 0 ? (static_cast<std::size_t>(m) + 63) / 64 : 0) {
    if (m < 1) throw std::invalid_argument("CoverageGrid: m must be >= 1");
    if (!(p > 0.0)) throw std::invalid_argument("CoverageGrid: p must be > 0");
    bits_.assign(words_per_row_ * static_cast<std::size_t>(m), 0);
}

std::int64_t CoverageGrid::set_range(int row, int begin, int end) {
    std::uint64_t* words = bits_.data() + static_cast<std::size_t>(row) * words_per_row_;
    std::int64_t fresh = 0;
    int j = begin;
    while (j < end) {
        const int word = j >> 6;
        const int bit = j & 63;
        const int take = std::min(64 - bit, end - j);
        const std::uint64_t mask = take == 64 ? ~0ULL : (((1ULL << take) - 1) << bit);
        fresh += std::popcount(mask & ~words[word]);
        words[word] |= mask;
        j += take;
    }
    return fresh;
}

std::int64_t CoverageGrid::stamp_disk(Position center, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("stamp_disk: r must be > 0");
    std::int64_t fresh = 0;
    for_each_disk_span(center, r, m_, p_, [&](int row, int begin, int end) {
        fresh += set_range(row, begin, end);
    });
    covered_ += fresh;
    return fresh;
}

bool CoverageGrid::is_covered(int row, int col) const {
    const std::uint64_t word = bits_[static_cast<std::size_t>(row) * words_per_row_ + (col >> 6)];
    return (word >> (col & 63)) & 1ULL;
}

std::int64_t CoverageGrid::recount() const {
    std::int64_t total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total;
}

double coverage_percent(const CoverageGrid& grid) {
    if (grid.complete()) return 100.0;
    return static_cast<double>(grid.covered_count()) / static_cast<double>(grid.cell_count()) * 100.0;
}

}  // namespace splitsim
