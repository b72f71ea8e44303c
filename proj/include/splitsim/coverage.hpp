#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "splitsim/geometry.hpp"

namespace splitsim {

// Cell (row, col) has its center at ((col + 0.5) p / m, (row + 0.5) p / m).
// Flat indices are row-major: row * m + col.

/// Flat indices of all cells whose center lies within torus distance r of
/// `center` (boundary inclusive), in ascending row-span order.
std::vector<std::int64_t> cells_in_disk(Position center, double r, int m, double p);

/// m x m "ever covered" bitfield with an incrementally maintained count.
/// Cells never go back to uncovered.
class CoverageGrid {
public:
    CoverageGrid(int m, double p);

    /// Marks every cell in the disk covered; returns how many were newly covered.
    std::int64_t stamp_disk(Position center, double r);

    int m() const { return m_; }
    double p() const { return p_; }
    std::int64_t cell_count() const { return static_cast<std::int64_t>(m_) * m_; }
    std::int64_t covered_count() const { return covered_; }
    bool complete() const { return covered_ == cell_count(); }
    bool is_covered(int row, int col) const;
    /// Full popcount over the bitfield, independent of the running counter.
    std::int64_t recount() const;

private:
    std::int64_t set_range(int row, int begin, int end);

    int m_;
    double p_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
    std::int64_t covered_ = 0;
};

/// covered / m^2 * 100.
double coverage_percent(const CoverageGrid& grid);

struct CoverageSample {
    std::int64_t t = 0;
    double coverage = 0.0;  // percent
};

struct CoverageSeries {
    std::vector<CoverageSample> samples;
    std::optional<std::int64_t> t_f;  // empty when the run was censored

    bool censored() const { return !t_f.has_value(); }
};

}  // namespace splitsim
