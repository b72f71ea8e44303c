#pragma once

#include <cstdint>

namespace splitsim {

/// Unconstrained displacement or raw coordinate pair.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Point on the periodic p x p environment. Both coordinates lie in [0, p).
struct Position {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

/// Canonical representative of `raw` on the torus of side `p`.
/// Throws std::invalid_argument for non-finite input or p <= 0.
Position wrap_position(Vec2 raw, double p);

/// Minimal-image displacement from `a` to `b`; each component in [-p/2, p/2).
Vec2 torus_delta(Position a, Position b, double p);

double torus_distance(Position a, Position b, double p);

/// Area of the lens formed by two radius-r disks whose centers are d apart.
/// Exactly 0 for d >= 2r.
double disk_overlap_area(double d, double r);

/// Per-agent footprint radius when total area `total_area` is split over n agents.
double radius_from_split(double total_area, std::int64_t n);

}  // namespace splitsim
