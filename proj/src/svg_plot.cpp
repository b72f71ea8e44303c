#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitsim/report.hpp"

namespace splitsim {

namespace {

constexpr double kPanelW = 360.0;
constexpr double kPanelH = 280.0;
constexpr double kLeft = 56.0;
constexpr double kRight = 96.0;  // room for the legend
constexpr double kTop = 36.0;
constexpr double kBottom = 44.0;
constexpr std::size_t kMaxPoints = 800;

struct Rgb {
    double r, g, b;
};

Rgb base_color(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::constant: return {0xD6, 0x27, 0x28};
        case ProfileKind::linear: return {0x2C, 0xA0, 0x2C};
        case ProfileKind::radius: return {0x1F, 0x77, 0xB4};
        case ProfileKind::area: return {0x3F, 0x00, 0x7D};
    }
    return {0, 0, 0};
}

// Dark shade for the fewest agents, light shade for the most.
std::string ramp(ProfileKind kind, std::size_t index, std::size_t count) {
    const Rgb c = base_color(kind);
    const double f = count > 1 ? static_cast<double>(index) / static_cast<double>(count - 1) : 0.5;
    auto channel = [f](double v) {
        const double dark = v * 0.45;
        const double light = v + (255.0 - v) * 0.65;
        return static_cast<int>(std::lround(dark + (light - dark) * f));
    };
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02X%02X%02X", channel(c.r), channel(c.g), channel(c.b));
    return buf;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (x, y)
};

struct Panel {
    ProfileKind profile;
    std::vector<Series> series;
};

std::string tick_label(double v) {
    std::ostringstream s;
    if (v != 0.0 && (std::fabs(v) >= 1e5 || std::fabs(v) < 1e-2)) {
        s.precision(2);
        s << std::scientific << v;
    } else {
        s << v;
    }
    return s.str();
}

void draw_panel(std::ostream& out, const Panel& panel, double ox, double x_max, bool log_x,
                const std::string& x_label) {
    const double pw = kPanelW - kLeft - kRight;
    const double ph = kPanelH - kTop - kBottom;
    const double x0 = ox + kLeft;
    const double y0 = kTop;
    const double x_lo = 0.0;
    const double x_hi = x_max > x_lo ? x_max : x_lo + 1.0;
    auto sx = [&](double x) { return x0 + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto sy = [&](double y) { return y0 + ph - y / 100.0 * ph; };

    out << "  <g>\n";
    out << "    <text x=\"" << num(x0 + pw / 2) << "\" y=\"" << num(y0 - 12)
        << "\" text-anchor=\"middle\" font-size=\"13\">" << to_string(panel.profile) << "</text>\n";
    out << "    <rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(pw) << "\" height=\""
        << num(ph) << "\" fill=\"none\" stroke=\"#444444\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double yv = 25.0 * k;
        out << "    <line x1=\"" << num(x0 - 4) << "\" y1=\"" << num(sy(yv)) << "\" x2=\"" << num(x0)
            << "\" y2=\"" << num(sy(yv)) << "\" stroke=\"#444444\"/>\n";
        out << "    <text x=\"" << num(x0 - 6) << "\" y=\"" << num(sy(yv) + 4)
            << "\" text-anchor=\"end\" font-size=\"10\">" << static_cast<int>(yv) << "</text>\n";
    }
    for (int k = 0; k <= 4; ++k) {
        const double xv = x_lo + (x_hi - x_lo) * k / 4.0;
        const std::string label = log_x ? tick_label(std::pow(10.0, xv)) : tick_label(xv);
        out << "    <line x1=\"" << num(sx(xv)) << "\" y1=\"" << num(y0 + ph) << "\" x2=\"" << num(sx(xv))
            << "\" y2=\"" << num(y0 + ph + 4) << "\" stroke=\"#444444\"/>\n";
        out << "    <text x=\"" << num(sx(xv)) << "\" y=\"" << num(y0 + ph + 16)
            << "\" text-anchor=\"middle\" font-size=\"10\">" << label << "</text>\n";
    }
    out << "    <text x=\"" << num(x0 + pw / 2) << "\" y=\"" << num(y0 + ph + 34)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << x_label << "</text>\n";
    out << "    <text x=\"" << num(ox + 14) << "\" y=\"" << num(y0 + ph / 2) << "\" text-anchor=\"middle\" "
        << "font-size=\"11\" transform=\"rotate(-90 " << num(ox + 14) << ' ' << num(y0 + ph / 2)
        << ")\">coverage (%)</text>\n";

    for (std::size_t i = 0; i < panel.series.size(); ++i) {
        const Series& s = panel.series[i];
        const std::string color = ramp(panel.profile, i, panel.series.size());
        const std::size_t stride = std::max<std::size_t>(1, (s.points.size() + kMaxPoints - 1) / kMaxPoints);
        out << "    <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < s.points.size(); k += stride) {
            out << num(sx(s.points[k].first)) << ',' << num(sy(s.points[k].second)) << ' ';
        }
        if ((s.points.size() - 1) % stride != 0) {
            out << num(sx(s.points.back().first)) << ',' << num(sy(s.points.back().second));
        }
        out << "\"/>\n";
        const double ly = y0 + 10 + 16.0 * static_cast<double>(i);
        const double lx = x0 + pw + 10;
        out << "    <line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 18) << "\" y2=\""
            << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "    <text x=\"" << num(lx + 22) << "\" y=\"" << num(ly + 4) << "\" font-size=\"10\">" << s.label
            << "</text>\n";
    }
    out << "  </g>\n";
}

std::filesystem::path write_figure(const std::filesystem::path& path, const std::string& title,
                                   const std::vector<Panel>& panels, double x_max, bool log_x,
                                   const std::string& x_label) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    const double width = kPanelW * static_cast<double>(panels.size());
    const double height = kPanelH + 20.0;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height)
        << "\" font-family=\"sans-serif\">\n";
    out << "  <title>" << title << "</title>\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" fill=\"#FFFFFF\"/>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        draw_panel(out, panels[i], kPanelW * static_cast<double>(i), x_max, log_x, x_label);
    }
    out << "</svg>\n";
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
    return path;
}

}  // namespace

std::vector<std::filesystem::path> emit_plots(std::span<const SummaryRow> rows, const std::filesystem::path& dir,
                                              std::ostream* warnings) {
    // experiment -> profile -> n -> rows
    std::map<int, std::map<int, std::map<std::int64_t, std::vector<const SummaryRow*>>>> tree;
    std::vector<int> experiment_order;
    std::map<int, std::vector<int>> profile_order;
    for (const SummaryRow& r : rows) {
        const int e = static_cast<int>(r.experiment);
        const int p = static_cast<int>(r.profile);
        if (!tree.contains(e)) experiment_order.push_back(e);
        auto& profiles = tree[e];
        if (!profiles.contains(p)) profile_order[e].push_back(p);
        profiles[p][r.n].push_back(&r);
    }

    std::vector<std::filesystem::path> written;
    for (int e : experiment_order) {
        const auto experiment = static_cast<Experiment>(e);
        const std::string name(to_string(experiment));
        std::vector<Panel> panels;
        std::vector<Panel> final_panels;
        double t_max = 0.0;
        for (int p : profile_order[e]) {
            Panel panel{static_cast<ProfileKind>(p), {}};
            Panel final_panel{static_cast<ProfileKind>(p), {}};
            Series final_series{"mean c", {}};
            for (const auto& [n, group] : tree[e][p]) {
                Series s{"n = " + std::to_string(n), {}};
                for (const SummaryRow* r : group) {
                    if (r->runs > 0 && std::isfinite(r->mean)) s.points.emplace_back(static_cast<double>(r->t), r->mean);
                }
                if (s.points.empty()) {
                    if (warnings) {
                        *warnings << "warning: " << name << '/' << to_string(panel.profile) << " n=" << n
                                  << " has no data; omitted from plot\n";
                    }
                    continue;
                }
                std::sort(s.points.begin(), s.points.end());
                t_max = std::max(t_max, s.points.back().first);
                final_series.points.emplace_back(std::log10(static_cast<double>(n)), s.points.back().second);
                panel.series.push_back(std::move(s));
            }
            if (panel.series.empty()) continue;
            final_panel.series.push_back(std::move(final_series));
            panels.push_back(std::move(panel));
            final_panels.push_back(std::move(final_panel));
        }
        if (panels.empty()) {
            if (warnings) *warnings << "warning: experiment " << name << " has no data; no plot written\n";
            continue;
        }
        const std::string x_label = experiment == Experiment::teleport ? "round" : "step";
        written.push_back(write_figure(dir / (name + ".svg"), "mean coverage, " + name, panels, t_max, false,
                                       x_label));
        if (experiment == Experiment::initial_coverage) {
            double log_n_max = 0.0;
            for (const Panel& p : final_panels) {
                for (const auto& pt : p.series.front().points) log_n_max = std::max(log_n_max, pt.first);
            }
            written.push_back(write_figure(dir / (name + "_final_vs_n.svg"),
                                           "mean coverage at the last step vs n, " + name, final_panels,
                                           log_n_max, true, "n (log scale)"));
        }
    }
    return written;
}

}  // namespace splitsim
