#include "funceq/grid_function.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "funceq/errors.hpp"
#include "test_support.hpp"

using namespace funceq;

TEST(GridFunction, IdentityInterpolatesExactly) {
    const auto f = GridFunction::identity(2048);
    EXPECT_NEAR(f(0.3), 0.3, 1e-15);
    EXPECT_EQ(f(0.0), 0.0);
    EXPECT_EQ(f(1.0), 1.0);
}

TEST(GridFunction, HandInterpolationOfSquare) {
    const GridFunction f({0.0, 0.25, 1.0});
    EXPECT_DOUBLE_EQ(eval(f, 0.75), 0.625);
    EXPECT_DOUBLE_EQ(eval(f, 0.5), 0.25);
}

TEST(GridFunction, NodesReadBackStoredValues) {
    std::mt19937_64 rng(7);
    for (std::size_t n : {3u, 10u, 49u, 1000u, 2048u}) {
        const auto f = GridFunction::sample([](double x) { return std::sin(7.0 * x) + x * x; }, n);
        for (std::size_t i = 0; i <= n; ++i) {
            ASSERT_EQ(f(static_cast<double>(i) / static_cast<double>(n)), f[i]) << "n=" << n << " i=" << i;
        }
    }
}

TEST(GridFunction, AffineFunctionsReproducedEverywhere) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = coef(rng);
        const double b = coef(rng);
        const auto f = GridFunction::sample([=](double x) { return a * x + b; }, 17 + trial);
        for (int k = 0; k < 20; ++k) {
            const double x = unit(rng);
            ASSERT_NEAR(f(x), a * x + b, 1e-13);
        }
    }
}

TEST(GridFunction, RejectsOutOfDomainAndBadShapes) {
    const auto f = GridFunction::identity(4);
    EXPECT_THROW(f(-0.1), DomainError);
    EXPECT_THROW(f(1.0 + 1e-9), DomainError);
    EXPECT_THROW(f(std::nan("")), DomainError);
    EXPECT_THROW(GridFunction({0.0, 1.0}), ShapeError);
    EXPECT_THROW(GridFunction({0.0, std::nan(""), 1.0}), DomainError);
    EXPECT_THROW(GridFunction::identity(1), ShapeError);
}

TEST(GridFunction, AdmissibilityIsExact) {
    EXPECT_TRUE(GridFunction::identity(8).admissible());
    EXPECT_FALSE(GridFunction({0.0, 0.5, 1.0 - 1e-16}).admissible());
    EXPECT_FALSE(GridFunction::zero(8).admissible());
}

TEST(GridFunction, SampleAdmissibleSnapsWithinTolerance) {
    const auto f = sample_admissible([](double x) { return std::sin(std::numbers::pi * x / 2.0); }, 64);
    EXPECT_TRUE(f.admissible());
    EXPECT_THROW(sample_admissible([](double x) { return x + 1e-6; }, 64), PreconditionError);
}

TEST(LipschitzNorm, Identity) {
    EXPECT_DOUBLE_EQ(lipschitz_norm(GridFunction::identity(2048)), 1.0);
}

TEST(LipschitzNorm, SineEstimateApproachesHalfPiFromBelow) {
    const auto f = GridFunction::sample([](double x) { return std::sin(std::numbers::pi * x / 2.0); }, 2048);
    const double norm = lipschitz_norm(f);
    EXPECT_LE(norm, std::numbers::pi / 2.0);
    EXPECT_GE(norm, std::numbers::pi / 2.0 - 0.01);
}

TEST(LipschitzNorm, QuarticEstimateApproachesFourFromBelow) {
    const auto f = GridFunction::sample([](double x) { return std::pow(x, 4); }, 2048);
    const double norm = lipschitz_norm(f);
    EXPECT_LE(norm, 4.0);
    EXPECT_GE(norm, 4.0 - 0.01);
}

TEST(LipschitzNorm, AdjacentPairsAttainTheAllPairsSupremum) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 40;
        std::vector<double> v(n + 1);
        for (auto& x : v) x = noise(rng);
        const GridFunction f(v);
        ASSERT_NEAR(lipschitz_norm(f), test_support::brute_force_lipschitz(f), 1e-12 * (1.0 + lipschitz_norm(f)));
    }
}

TEST(Distance, IdentityOfIndiscernibles) {
    std::mt19937_64 rng(5);
    const auto f = test_support::random_admissible(rng, 128);
    for (Metric m : {Metric::sup, Metric::l2, Metric::lip}) {
        EXPECT_EQ(distance(f, f, m), 0.0);
    }
}

TEST(Distance, IdentityAgainstZero) {
    const auto id = GridFunction::identity(2048);
    const auto zero = GridFunction::zero(2048);
    EXPECT_DOUBLE_EQ(distance(id, zero, Metric::sup), 1.0);
    EXPECT_NEAR(distance(id, zero, Metric::l2), 1.0 / std::sqrt(3.0), 1e-6);
    EXPECT_DOUBLE_EQ(distance(id, zero, Metric::lip), 1.0);
}

TEST(Distance, MismatchedGridsAreAShapeError) {
    EXPECT_THROW(distance(GridFunction::identity(8), GridFunction::identity(16), Metric::sup), ShapeError);
}

TEST(Distance, LipMetricIsNormOfDifference) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = test_support::random_admissible(rng, 64);
        const auto g = test_support::random_admissible(rng, 64);
        std::vector<double> diff(65);
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = f[i] - g[i];
        EXPECT_NEAR(distance(f, g, Metric::lip), test_support::brute_force_lipschitz(GridFunction(diff)), 1e-9);
    }
}

TEST(Trapezoid, IntegratesLinearExactly) {
    std::vector<double> v(11);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = 3.0 * static_cast<double>(i) / 10.0 + 1.0;
    EXPECT_NEAR(trapezoid(v), 2.5, 1e-15);
}

TEST(Metric, NamesRoundTrip) {
    for (Metric m : {Metric::sup, Metric::l2, Metric::lip}) {
        EXPECT_EQ(parse_metric(to_string(m)), m);
    }
    EXPECT_THROW(parse_metric("linf"), DomainError);
}
