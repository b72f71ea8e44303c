#include "splitsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>

namespace splitsim {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

using GroupKey = std::tuple<int, int, std::int64_t>;  // experiment, profile, n

}  // namespace

void write_csv(std::span<const RunRecord> records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const RunRecord& rec : records) {
        if (!rec.result) continue;
        const auto& samples = rec.result->series.samples;
        const auto& survivors = rec.result->survivors;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            out << to_string(rec.key.experiment) << ',' << to_string(rec.key.profile) << ',' << rec.key.n << ','
                << rec.key.seed << ',' << samples[i].t << ',' << fixed6(samples[i].coverage) << ','
                << survivors[i].alive << '\n';
        }
    }
}

void write_csv(std::span<const RunRecord> records, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_csv(records, out);
    finish_output(out, path);
}

std::vector<SummaryRow> summarize(std::span<const RunRecord> records) {
    std::map<GroupKey, std::vector<const RunRecord*>> groups;
    std::vector<GroupKey> order;
    for (const RunRecord& rec : records) {
        if (!rec.result) continue;
        const GroupKey key{static_cast<int>(rec.key.experiment), static_cast<int>(rec.key.profile), rec.key.n};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(&rec);
    }

    std::vector<SummaryRow> rows;
    for (const GroupKey& key : order) {
        const auto& runs = groups[key];
        std::vector<std::int64_t> times;
        for (const RunRecord* r : runs) {
            for (const auto& s : r->result->series.samples) times.push_back(s.t);
        }
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());

        std::vector<double> tf;
        std::int64_t censored = 0;
        for (const RunRecord* r : runs) {
            if (r->result->series.t_f) {
                tf.push_back(static_cast<double>(*r->result->series.t_f));
            } else {
                tf.push_back(std::numeric_limits<double>::infinity());
                ++censored;
            }
        }
        std::sort(tf.begin(), tf.end());
        const std::size_t k = tf.size();
        const double median = k % 2 == 1 ? tf[k / 2] : 0.5 * (tf[k / 2 - 1] + tf[k / 2]);
        std::optional<double> tf_median;
        if (std::isfinite(median)) tf_median = median;

        std::vector<std::size_t> cursor(runs.size(), 0);
        for (std::int64_t t : times) {
            double sum = 0.0;
            std::vector<double> values;
            values.reserve(runs.size());
            for (std::size_t i = 0; i < runs.size(); ++i) {
                const auto& samples = runs[i]->result->series.samples;
                while (cursor[i] + 1 < samples.size() && samples[cursor[i] + 1].t <= t) ++cursor[i];
                values.push_back(samples[cursor[i]].coverage);
                sum += values.back();
            }
            const double mean = sum / static_cast<double>(values.size());
            double ss = 0.0;
            for (double v : values) ss += (v - mean) * (v - mean);
            const double sd = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;

            SummaryRow row;
            row.experiment = static_cast<Experiment>(std::get<0>(key));
            row.profile = static_cast<ProfileKind>(std::get<1>(key));
            row.n = std::get<2>(key);
            row.t = t;
            row.mean = mean;
            row.stddev = sd;
            row.runs = static_cast<std::int64_t>(runs.size());
            row.tf_median = tf_median;
            row.tf_censored = censored;
            rows.push_back(row);
        }
    }
    return rows;
}

void write_summary_csv(std::span<const SummaryRow> rows, std::ostream& out) {
    out << "experiment,profile,n,t,mean_coverage_pct,std_coverage_pct,runs,tf_median,tf_censored\n";
    for (const SummaryRow& r : rows) {
        out << to_string(r.experiment) << ',' << to_string(r.profile) << ',' << r.n << ',' << r.t << ','
            << fixed6(r.mean) << ',' << fixed6(r.stddev) << ',' << r.runs << ','
            << (r.tf_median ? fixed6(*r.tf_median) : std::string("censored")) << ',' << r.tf_censored << '\n';
    }
}

void write_summary_csv(std::span<const SummaryRow> rows, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_summary_csv(rows, out);
    finish_output(out, path);
}

}  // namespace splitsim
