#include "funceq/exact_family.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "funceq/certify.hpp"
#include "funceq/errors.hpp"
#include "funceq/solver.hpp"
#include "test_support.hpp"

using namespace funceq;

TEST(ExactFamily, LinearCaseSimplifies) {
    const auto spec = build_spec({0.3, 0.7, 1.0});
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        EXPECT_NEAR(spec.phi(x), 0.3 * x / (0.7 - 0.4 * x), 1e-14);
    }
    EXPECT_DOUBLE_EQ(spec.phi(1.0), 1.0);
}

TEST(ExactFamily, QuarticAtHalf) {
    const double by_hand = 0.7599 * 0.0625 / (std::pow(0.85, 4) - 0.2401 * 0.0625);
    EXPECT_NEAR(phi_m({0.3, 0.7, 4.0}, 0.5), by_hand, 1e-14);
    EXPECT_NEAR(by_hand, 0.093676, 1e-6);
}

TEST(ExactFamily, CoefficientEndpointsAndRange) {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    std::uniform_real_distribution<double> ms(0.2, 9.0);
    for (int i = 0; i < 200; ++i) {
        double a = u(rng), be = u(rng);
        if (a > be) std::swap(a, be);
        const ExactFamilyParams p{a, be, ms(rng)};
        ASSERT_EQ(phi_m(p, 0.0), 0.0);
        ASSERT_NEAR(phi_m(p, 1.0), 1.0, 1e-12);
        const auto rep = certify(build_spec(p), 256);
        ASSERT_TRUE(rep.boundary.all()) << a << " " << be << " " << p.m;
        ASSERT_TRUE(rep.range_ok);
    }
}

TEST(ExactFamily, DenominatorPositive) {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int i = 0; i < 100; ++i) {
        double a = u(rng), be = u(rng);
        if (a > be) std::swap(a, be);
        const double m = 0.5 + i * 0.1;
        for (int k = 0; k <= 200; ++k) {
            const double x = k / 200.0;
            ASSERT_GT(std::pow(a * x + 1.0 - a, m) - std::pow(be * x, m), 0.0);
        }
    }
}

TEST(ExactFamily, ParameterValidation) {
    EXPECT_THROW(build_spec({0.7, 0.3, 1.0}), DomainError);
    EXPECT_THROW(build_spec({0.3, 0.7, 0.0}), DomainError);
    EXPECT_THROW(build_spec({0.3, 1.0, 2.0}), DomainError);
    EXPECT_THROW(build_spec({0.0, 0.7, 2.0}), DomainError);
    EXPECT_NO_THROW(build_spec({0.4, 0.4, 2.0}));
}

TEST(ExactSolution, Samples) {
    const auto id = exact_solution(1.0, 64);
    EXPECT_EQ(distance(id, GridFunction::identity(64), Metric::sup), 0.0);
    EXPECT_EQ(exact_solution(4.0, 64)[32], 0.0625);
    const auto f = exact_solution(7.5, 64);
    EXPECT_EQ(f[0], 0.0);
    EXPECT_EQ(f[64], 1.0);
    EXPECT_TRUE(f.admissible());
}

TEST(TrueErrorSeries, StartAtSolution) {
    const ExactFamilyParams p{0.3, 0.7, 4.0};
    const auto errs = true_error_series(p, exact_solution(4.0, 4096), 10, Metric::sup);
    ASSERT_EQ(errs.size(), 11u);
    for (double e : errs) EXPECT_LE(e, 1e-6);
}

TEST(TrueErrorSeries, DecayFromIdentity) {
    const ExactFamilyParams p{0.3, 0.7, 4.0};
    const auto errs = true_error_series(p, GridFunction::identity(2048), 20, Metric::sup);
    ASSERT_EQ(errs.size(), 21u);
    for (std::size_t n = 2; n < errs.size(); ++n) EXPECT_LT(errs[n], errs[n - 1]) << n;
    std::vector<double> idx;
    std::vector<double> val(errs.begin() + 2, errs.end());
    for (std::size_t n = 2; n < errs.size(); ++n) idx.push_back(static_cast<double>(n));
    const auto fit = fit_exponential(idx, val);
    EXPECT_GE(fit.ratio, 0.63);
    EXPECT_LE(fit.ratio, 0.79);
}

TEST(ExactFamilyProperty, FixedPointIdentity) {
    for (double m : {1.0, 2.0, 4.0, 7.5}) {
        for (auto [a, be] : {std::pair{0.3, 0.7}, std::pair{0.1, 0.5}}) {
            EXPECT_LE(residual(build_spec({a, be, m}), exact_solution(m, 4096), Metric::sup), 1e-6)
                << "m=" << m << " alpha=" << a << " beta=" << be;
        }
    }
}

TEST(ExactFamilyProperty, SolutionIndependentOfParameters) {
    std::mt19937_64 rng(16);
    const SolveOptions opts{1e-6, 2000, Metric::sup};
    for (double m : {2.0, 4.0}) {
        const auto a = solve(build_spec({0.3, 0.7, m}), GridFunction::identity(2048), opts);
        const auto b = solve(build_spec({0.1, 0.5, m}), test_support::random_admissible(rng, 2048, 4, 0.3), opts);
        ASSERT_EQ(a.history.stop_reason, StopReason::tolerance);
        ASSERT_EQ(b.history.stop_reason, StopReason::tolerance);
        const auto exact = exact_solution(m, 2048);
        EXPECT_LE(distance(a.solution, b.solution, Metric::sup), 20 * opts.tol) << m;
        EXPECT_LE(distance(a.solution, exact, Metric::sup), 20 * opts.tol) << m;
        EXPECT_LE(distance(b.solution, exact, Metric::sup), 20 * opts.tol) << m;
    }
}
