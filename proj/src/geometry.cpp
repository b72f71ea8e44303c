#include "splitsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace splitsim {

namespace {

double wrap_coordinate(double v, double p) {
    double w = std::fmod(v, p);
    if (w < 0.0) w += p;
    // fmod of a tiny negative value plus p can round up to p itself.
    if (w >= p) w = 0.0;
    return w;
}

double minimal_image(double d, double p) {
    const double half = 0.5 * p;
    if (d >= half) return d - p;
    if (d < -half) return d + p;
    return d;
}

}  // namespace

Position wrap_position(Vec2 raw, double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw std::invalid_argument("wrap_position: p must be finite and > 0");
    }
    if (!std::isfinite(raw.x) || !std::isfinite(raw.y)) {
        throw std::invalid_argument("wrap_position: coordinates must be finite");
    }
    return {wrap_coordinate(raw.x, p), wrap_coordinate(raw.y, p)};
}

Vec2 torus_delta(Position a, Position b, double p) {
    return {minimal_image(b.x - a.x, p), minimal_image(b.y - a.y, p)};
}

double torus_distance(Position a, Position b, double p) {
    const Vec2 d = torus_delta(a, b, p);
    return std::hypot(d.x, d.y);
}

double disk_overlap_area(double d, double r) {
    if (!(d >= 0.0)) throw std::invalid_argument("disk_overlap_area: d must be >= 0");
    if (!(r > 0.0)) throw std::invalid_argument("disk_overlap_area: r must be > 0");
    if (d >= 2.0 * r) return 0.0;
    const double c = std::clamp(d / (2.0 * r), -1.0, 1.0);
    const double chord = std::max(0.0, 4.0 * r * r - d * d);
    // cancellation can leave a tiny negative residue near tangency
    return std::max(0.0, 2.0 * r * r * std::acos(c) - 0.5 * d * std::sqrt(chord));
}

double radius_from_split(double total_area, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("radius_from_split: n must be >= 1");
    if (!(total_area > 0.0)) throw std::invalid_argument("radius_from_split: total area must be > 0");
    return std::sqrt(total_area / (static_cast<double>(n) * std::numbers::pi));
}

}  // namespace splitsim
