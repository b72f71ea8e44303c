#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "splitsim/geometry.hpp"
#include "splitsim/motion.hpp"
#include "splitsim/rng.hpp"

namespace splitsim {

struct CollisionParams {
    bool enabled = false;
    double residual = 0.5;        // velocity fraction kept under full overlap, (0, 1]
    bool failed_obstruct = true;  // failed agents still occupy space

    void validate() const;
};

struct FailureParams {
    bool enabled = false;
    double beta = 0.1;   // asymptotic per-step failure probability
    double alpha = 0.1;  // how fast k(n) approaches beta

    void validate() const;
};

/// Velocity multiplier from summed pairwise footprint overlap, floored at the residual.
/// Heading is never touched.
double collision_velocity_factor(Position self, std::span<const Position> neighbors,
                                 double r, double p, const CollisionParams& params);

/// k(n) = beta (1 - n^-alpha).
double failure_rate(std::int64_t n, const FailureParams& params);

/// One Bernoulli(k) draw per alive agent, in index order. Returns how many failed.
std::int64_t apply_failures(std::span<AgentState> agents, double k, Rng& rng);

/// Uniform bucket grid over the torus with buckets at least `reach` wide.
/// Rebuilt from scratch each step; queries visit the 3x3 surrounding buckets.
class SpatialHash {
public:
    SpatialHash(double p, double reach);

    void rebuild(std::span<const Position> positions, std::span<const std::uint8_t> include);

    /// Calls fn(j) for each included index j != self whose bucket neighbours `at`.
    template <class Fn>
    void for_each_candidate(Position at, std::size_t self, Fn&& fn) const {
        if (side_ < 3) {
            for (std::size_t j : members_) {
                if (j != self) fn(j);
            }
            return;
        }
        const int cx = bucket_of(at.x);
        const int cy = bucket_of(at.y);
        for (int dy = -1; dy <= 1; ++dy) {
            const int by = (cy + dy + side_) % side_;
            for (int dx = -1; dx <= 1; ++dx) {
                const int bx = (cx + dx + side_) % side_;
                const std::size_t b = static_cast<std::size_t>(by) * side_ + bx;
                for (std::uint32_t k = starts_[b]; k < starts_[b + 1]; ++k) {
                    if (members_[k] != self) fn(members_[k]);
                }
            }
        }
    }

    int side() const { return side_; }

private:
    int bucket_of(double v) const;

    double p_;
    int side_;
    std::vector<std::uint32_t> starts_;
    std::vector<std::size_t> members_;
    std::vector<int> bucket_scratch_;
};

}  // namespace splitsim
