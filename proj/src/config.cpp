#include "splitsim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace splitsim {

namespace {

constexpr std::string_view kHeader = "splitsim-config";
constexpr std::string_view kVersion = "v1";

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// Accepts a plain number or a product such as "pi * 0.01".
double parse_real(const std::string& key, const std::string& text) {
    double product = 1.0;
    std::istringstream in(text);
    std::string factor;
    bool any = false;
    while (std::getline(in, factor, '*')) {
        factor = trim(factor);
        if (factor == "pi") {
            product *= std::numbers::pi;
        } else {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(factor.data(), factor.data() + factor.size(), v);
            if (ec != std::errc{} || ptr != factor.data() + factor.size() || factor.empty()) {
                throw ConfigError(key, "expected a real number, got '" + text + "'");
            }
            product *= v;
        }
        any = true;
    }
    if (!any || !std::isfinite(product)) throw ConfigError(key, "expected a real number, got '" + text + "'");
    return product;
}

template <class Int>
Int parse_int(const std::string& key, const std::string& text) {
    Int v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError(key, "expected an integer, got '" + text + "'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "on" || text == "yes" || text == "1") return true;
    if (text == "false" || text == "off" || text == "no" || text == "0") return false;
    throw ConfigError(key, "expected true or false, got '" + text + "'");
}

void require(bool ok, const std::string& key, const std::string& range) {
    if (!ok) throw ConfigError(key, key + " must be " + range);
}

}  // namespace

std::string_view to_string(Experiment e) {
    switch (e) {
        case Experiment::teleport: return "teleport";
        case Experiment::initial_coverage: return "initial_coverage";
        case Experiment::full_coverage: return "full_coverage";
        case Experiment::collisions: return "collisions";
        case Experiment::failures: return "failures";
    }
    return "unknown";
}

Experiment parse_experiment(std::string_view name) {
    for (Experiment e : {Experiment::teleport, Experiment::initial_coverage, Experiment::full_coverage,
                         Experiment::collisions, Experiment::failures}) {
        if (to_string(e) == name) return e;
    }
    throw ConfigError("experiment", "unknown experiment '" + std::string(name) +
                                        "' (expected teleport, initial_coverage, full_coverage, "
                                        "collisions or failures)");
}

void SweepSpec::reseed(std::uint64_t master) {
    const std::size_t count = seeds.empty() ? 30 : seeds.size();
    master_seed = master;
    seeds.clear();
    for (std::size_t i = 0; i < count; ++i) seeds.push_back(master + i);
}

SweepSpec default_spec(Experiment experiment) {
    SweepSpec spec;
    spec.experiment = experiment;
    spec.n_values = {1, 2, 10, 100, 500, 1000};
    spec.profiles = {ProfileKind::constant, ProfileKind::linear, ProfileKind::radius, ProfileKind::area};
    spec.base.max_steps = 10'000;
    switch (experiment) {
        case Experiment::teleport:
            spec.base.mode = Mode::teleport;
            spec.base.m = 2000;
            spec.base.max_steps = 1000;
            spec.profiles = {ProfileKind::constant};
            break;
        case Experiment::initial_coverage:
            spec.base.max_steps = 100;
            break;
        case Experiment::full_coverage:
            break;
        case Experiment::collisions:
            spec.base.collisions.enabled = true;
            spec.n_values = {2, 100, 1000};
            break;
        case Experiment::failures:
            spec.base.failures.enabled = true;
            spec.profiles = {ProfileKind::constant};
            break;
    }
    spec.reseed(0);
    return spec;
}

SweepSpec parse_config_text(std::string_view text) {
    std::map<std::string, std::string> entries;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.rfind(kHeader, 0) == 0) {
            if (saw_content) throw ConfigError("header", "header must be the first non-comment line");
            const std::string version = trim(std::string_view(line).substr(kHeader.size()));
            if (version != kVersion) {
                throw ConfigError("header", "unsupported config version '" + version + "' (expected v1)");
            }
            saw_content = true;
            continue;
        }
        saw_content = true;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
        }
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no), "missing key");
        if (!entries.emplace(key, value).second) throw ConfigError(key, "duplicate key");
    }

    const auto take = [&](const std::string& key) -> std::optional<std::string> {
        const auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        std::string v = it->second;
        entries.erase(it);
        return v;
    };

    Experiment experiment = Experiment::full_coverage;
    if (auto v = take("experiment")) experiment = parse_experiment(*v);
    SweepSpec spec = default_spec(experiment);
    SimConfig& base = spec.base;

    if (auto v = take("n_values")) {
        const auto items = split_list(*v);
        require(!items.empty(), "n_values", "a non-empty list");
        spec.n_values.clear();
        for (std::size_t i = 0; i < items.size(); ++i) {
            const std::string key = "n_values[" + std::to_string(i) + "]";
            const auto n = parse_int<std::int64_t>(key, items[i]);
            require(n >= 1, key, ">= 1");
            spec.n_values.push_back(n);
        }
    }
    if (auto v = take("profiles")) {
        const auto items = split_list(*v);
        require(!items.empty(), "profiles", "a non-empty list");
        spec.profiles.clear();
        for (std::size_t i = 0; i < items.size(); ++i) {
            try {
                spec.profiles.push_back(parse_profile_kind(items[i]));
            } catch (const std::invalid_argument& e) {
                throw ConfigError("profiles[" + std::to_string(i) + "]", e.what());
            }
        }
    }

    std::uint64_t master = 0;
    std::size_t seed_count = 30;
    if (auto v = take("seeds.master")) master = parse_int<std::uint64_t>("seeds.master", *v);
    if (auto v = take("seeds.count")) {
        const auto c = parse_int<std::int64_t>("seeds.count", *v);
        require(c >= 1 && c <= 100'000, "seeds.count", "in [1, 100000]");
        seed_count = static_cast<std::size_t>(c);
    }
    spec.seeds.assign(seed_count, 0);
    spec.reseed(master);
    if (auto v = take("seeds.list")) {
        const auto items = split_list(*v);
        require(!items.empty(), "seeds.list", "a non-empty list");
        spec.seeds.clear();
        std::set<std::uint64_t> seen;
        for (std::size_t i = 0; i < items.size(); ++i) {
            const std::string key = "seeds.list[" + std::to_string(i) + "]";
            const auto s = parse_int<std::uint64_t>(key, items[i]);
            require(seen.insert(s).second, key, "distinct from earlier seeds");
            spec.seeds.push_back(s);
        }
    }

    auto real = [&](const std::string& key, double& target, auto&& ok, const char* range) {
        if (auto v = take(key)) {
            const double x = parse_real(key, *v);
            require(ok(x), key, range);
            target = x;
        }
    };
    auto integer = [&](const std::string& key, auto& target, auto&& ok, const char* range) {
        if (auto v = take(key)) {
            const auto x = parse_int<std::int64_t>(key, *v);
            require(ok(x), key, range);
            target = static_cast<std::remove_reference_t<decltype(target)>>(x);
        }
    };
    auto flag = [&](const std::string& key, bool& target) {
        if (auto v = take(key)) target = parse_bool(key, *v);
    };

    real("env.p", base.p, [](double x) { return x > 0.0; }, "> 0");
    integer("env.m", base.m, [](std::int64_t x) { return x >= 1 && x <= 10'000; }, "in [1, 10000]");
    real("env.total_area", base.total_area, [&](double x) { return x > 0.0 && x < base.p * base.p; },
         "in (0, env.p^2)");
    real("velocity.v0", base.profile.v0, [](double x) { return x >= 0.0; }, ">= 0");
    real("velocity.gamma", base.profile.gamma, [](double x) { return x >= 0.0; }, ">= 0");
    real("walk.alpha", base.walk.alpha, [](double x) { return x > 0.0 && x <= 2.0; }, "in (0, 2]");
    real("walk.rho", base.walk.rho, [](double x) { return x >= 0.0 && x < 1.0; }, "in [0, 1)");
    real("walk.mu", base.walk.mu, [](double x) { return x >= -std::numbers::pi && x < std::numbers::pi; },
         "in [-pi, pi)");
    integer("walk.delta_min", base.walk.delta_min, [](std::int64_t x) { return x >= 1; }, ">= 1");
    integer("walk.delta_max", base.walk.delta_max,
            [&](std::int64_t x) { return x >= base.walk.delta_min && x - base.walk.delta_min < 10'000'000; },
            ">= walk.delta_min and < walk.delta_min + 10000000");
    flag("collisions.enabled", base.collisions.enabled);
    real("collisions.residual", base.collisions.residual, [](double x) { return x > 0.0 && x <= 1.0; },
         "in (0, 1]");
    flag("collisions.failed_obstruct", base.collisions.failed_obstruct);
    flag("failures.enabled", base.failures.enabled);
    real("failures.beta", base.failures.beta, [](double x) { return x >= 0.0 && x <= 1.0; }, "in [0, 1]");
    real("failures.alpha", base.failures.alpha, [](double x) { return x > 0.0; }, "> 0");
    integer("run.max_steps", base.max_steps, [](std::int64_t x) { return x >= 0; }, ">= 0");
    integer("run.record_every", base.record_every, [](std::int64_t x) { return x >= 1; }, ">= 1");

    if (!entries.empty()) {
        throw ConfigError(entries.begin()->first,
                          "unknown key (see README for the schema)");
    }

    for (std::int64_t n : spec.n_values) {
        SimConfig probe = base;
        probe.n = n;
        probe.validate();
    }
    return spec;
}

SweepSpec parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("path", "cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace splitsim
