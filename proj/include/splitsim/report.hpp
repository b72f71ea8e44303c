#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "splitsim/sweep.hpp"

namespace splitsim {

inline constexpr const char* kCsvHeader = "experiment,profile,n,seed,t,coverage_pct,alive";

/// Long format, one row per recorded sample, LF line endings. Errored runs are skipped.
void write_csv(std::span<const RunRecord> records, std::ostream& out);
/// Throws std::runtime_error naming the path on I/O failure.
void write_csv(std::span<const RunRecord> records, const std::filesystem::path& path);

struct SummaryRow {
    Experiment experiment = Experiment::full_coverage;
    ProfileKind profile = ProfileKind::constant;
    std::int64_t n = 1;
    std::int64_t t = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation across seeds
    std::int64_t runs = 0;
    std::optional<double> tf_median;  // empty when the median run is censored
    std::int64_t tf_censored = 0;
};

/// Mean and sample standard deviation of c per (experiment, profile, n, t).
/// A run that stopped early contributes its last recorded value to later t
/// (coverage is monotone, and a completed run stays at 100).
std::vector<SummaryRow> summarize(std::span<const RunRecord> records);

void write_summary_csv(std::span<const SummaryRow> rows, std::ostream& out);
void write_summary_csv(std::span<const SummaryRow> rows, const std::filesystem::path& path);

/// One SVG per experiment: a panel per profile with mean c(t) per n, darker
/// lines for fewer agents. Groups without data are dropped with a warning.
/// Returns the files written.
std::vector<std::filesystem::path> emit_plots(std::span<const SummaryRow> rows,
                                              const std::filesystem::path& dir,
                                              std::ostream* warnings = nullptr);

}  // namespace splitsim
