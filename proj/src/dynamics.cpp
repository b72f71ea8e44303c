#include "splitsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace splitsim {

void CollisionParams::validate() const {
    if (!(residual > 0.0 && residual <= 1.0)) {
        throw std::invalid_argument("collisions.residual must be in (0, 1]");
    }
}

void FailureParams::validate() const {
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("failures.beta must be in [0, 1]");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("failures.alpha must be > 0");
}

double collision_velocity_factor(Position self, std::span<const Position> neighbors,
                                 double r, double p, const CollisionParams& params) {
    if (!params.enabled) return 1.0;
    double overlap = 0.0;
    for (const Position& other : neighbors) {
        overlap += disk_overlap_area(torus_distance(self, other, p), r);
    }
    const double footprint = std::numbers::pi * r * r;
    return std::clamp(1.0 - overlap / footprint, params.residual, 1.0);
}

double failure_rate(std::int64_t n, const FailureParams& params) {
    if (n < 1) throw std::invalid_argument("failure_rate: n must be >= 1");
    if (n == 1) return 0.0;
    return params.beta * (1.0 - std::pow(static_cast<double>(n), -params.alpha));
}

std::int64_t apply_failures(std::span<AgentState> agents, double k, Rng& rng) {
    std::int64_t failed = 0;
    for (AgentState& a : agents) {
        if (!a.alive) continue;
        if (uniform01(rng) < k) {
            a.alive = false;
            a.effective_velocity = 0.0;
            ++failed;
        }
    }
    return failed;
}

SpatialHash::SpatialHash(double p, double reach) : p_(p) {
    if (!(p > 0.0) || !(reach > 0.0)) throw std::invalid_argument("SpatialHash: p and reach must be > 0");
    const double buckets = std::floor(p / reach);
    side_ = static_cast<int>(std::clamp(buckets, 1.0, 4096.0));
    starts_.assign(static_cast<std::size_t>(side_) * side_ + 1, 0);
}

int SpatialHash::bucket_of(double v) const {
    const int b = static_cast<int>(v / p_ * side_);
    return std::clamp(b, 0, side_ - 1);
}

void SpatialHash::rebuild(std::span<const Position> positions, std::span<const std::uint8_t> include) {
    members_.clear();
    if (side_ < 3) {
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (include[i]) members_.push_back(i);
        }
        return;
    }
    std::fill(starts_.begin(), starts_.end(), 0);
    bucket_scratch_.assign(positions.size(), -1);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (!include[i]) continue;
        const int b = bucket_of(positions[i].y) * side_ + bucket_of(positions[i].x);
        bucket_scratch_[i] = b;
        ++starts_[static_cast<std::size_t>(b) + 1];
    }
    for (std::size_t b = 1; b < starts_.size(); ++b) starts_[b] += starts_[b - 1];
    members_.resize(starts_.back());
    std::vector<std::uint32_t> cursor(starts_.begin(), starts_.end() - 1);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (bucket_scratch_[i] >= 0) members_[cursor[static_cast<std::size_t>(bucket_scratch_[i])]++] = i;
    }
}

}  // namespace splitsim
