#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "splitsim/analysis.hpp"
#include "splitsim/oracles.hpp"

using namespace splitsim;

namespace {
constexpr double kA = std::numbers::pi * 0.01;
constexpr double kV0 = 0.005;
constexpr double kGamma = 4e-6;
}  // namespace

TEST(InitialRate, RatioLaws) {
    const double c1 = initial_rate(ProfileKind::constant, 1, kA, kV0, kGamma);
    const double r1 = initial_rate(ProfileKind::radius, 1, kA, kV0, kGamma);
    const double a1 = initial_rate(ProfileKind::area, 1, kA, kV0, kGamma);
    for (std::int64_t n = 1; n <= 10'000; ++n) {
        const double sn = std::sqrt(static_cast<double>(n));
        ASSERT_NEAR(initial_rate(ProfileKind::constant, n, kA, kV0, kGamma) / c1 / sn, 1.0, 1e-12);
        ASSERT_NEAR(initial_rate(ProfileKind::radius, n, kA, kV0, kGamma) / r1, 1.0, 1e-12);
        ASSERT_NEAR(initial_rate(ProfileKind::area, n, kA, kV0, kGamma) / a1 * sn, 1.0, 1e-12);
    }
}

TEST(InitialRate, LinearClosedForm) {
    const double k = 2.0 * std::sqrt(kA / std::numbers::pi);
    for (std::int64_t n = 1; n <= 1250; ++n) {
        const double nd = static_cast<double>(n);
        const double want = k * (std::sqrt(nd) * (kV0 + kGamma) - kGamma * std::pow(nd, 1.5));
        ASSERT_NEAR(initial_rate(ProfileKind::linear, n, kA, kV0, kGamma) / want, 1.0, 1e-12) << n;
    }
    EXPECT_EQ(initial_rate(ProfileKind::linear, 1251, kA, kV0, kGamma), 0.0);
}

TEST(InitialRate, SingleAgentSweepsItsDiameter) {
    // r = 0.1, v = 0.005: a strip of width 0.2 per step.
    EXPECT_NEAR(initial_rate(ProfileKind::constant, 1, kA, kV0, kGamma), 0.2 * kV0, 1e-15);
}

TEST(OptimalN, ClosedFormAndScanAgree) {
    const auto n_star = optimal_n_linear(kV0, kGamma);
    ASSERT_TRUE(n_star.has_value());
    EXPECT_NEAR(*n_star, 417.0, 417.0 * 1e-12);
    EXPECT_EQ(best_integer_n_linear(kV0, kGamma, kA, 10'000), 417);
    EXPECT_FALSE(optimal_n_linear(kV0, 0.0).has_value());
    EXPECT_EQ(linear_zero_velocity_n(kV0, kGamma), 1250);
}

TEST(Teleport, IdealIncrement) {
    EXPECT_NEAR(ideal_teleport_increment(kA, 1.0), std::numbers::pi, 1e-12);
    EXPECT_THROW(ideal_teleport_increment(1.0, 1.0), std::invalid_argument);
    // Expected first-round gain under independent placement sits just below the ideal.
    const double gain = oracle::teleport_expected_coverage(kA, 1.0, 1000, 1) -
                        oracle::teleport_expected_coverage(kA, 1.0, 1000, 0);
    EXPECT_GT(gain, 0.9 * std::numbers::pi);
    EXPECT_LT(gain, std::numbers::pi);
}

TEST(Survivors, ExpectedFraction) {
    FailureParams f;
    f.enabled = true;
    EXPECT_NEAR(expected_survivor_fraction(1000, f, 100), 0.005995, 1e-6);
    EXPECT_EQ(expected_survivor_fraction(1, f, 10'000), 1.0);
    EXPECT_EQ(expected_survivor_fraction(1000, f, 0), 1.0);
    const double k = failure_rate(1000, f);
    const double mc = oracle::bernoulli_survival(k, 200'000, 100, 3);
    const double p = expected_survivor_fraction(1000, f, 100);
    EXPECT_NEAR(mc, p, 4.0 * std::sqrt(p * (1 - p) / 200'000));
}

TEST(PredictTable, Layout) {
    const auto rows = predict_table({ProfileKind::constant, ProfileKind::area}, {1, 4}, kA, kV0, kGamma);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[1].kind, ProfileKind::constant);
    EXPECT_EQ(rows[1].n, 4);
    EXPECT_NEAR(rows[1].rate / rows[0].rate, 2.0, 1e-12);
    EXPECT_NEAR(rows[3].rate / rows[2].rate, 0.5, 1e-12);
}
