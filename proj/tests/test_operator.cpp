#include "funceq/operator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "funceq/certify.hpp"
#include "funceq/errors.hpp"
#include "funceq/exact_family.hpp"
#include "test_support.hpp"

using namespace funceq;

TEST(Operator, ParadiseOnIdentityAtHalf) {
    const auto tf = apply_T(paradise(0.1, 0.5), GridFunction::identity(2048));
    // 0.5 * 0.95 + 0.5 * 0.25
    EXPECT_NEAR(tf[1024], 0.6, 1e-15);
}

TEST(Operator, ExactFamilyFixesItsSolutionAtHalf) {
    const ExactFamilyParams p{0.3, 0.7, 4.0};
    const auto tf = apply_T(build_spec(p), exact_solution(4.0, 4096));
    const double w = (1.0 - std::pow(0.7, 4)) * 0.0625 / (std::pow(0.85, 4) - std::pow(0.35, 4));
    const double by_hand = w * std::pow(0.85, 4) + (1.0 - w) * std::pow(0.35, 4);
    EXPECT_NEAR(by_hand, 0.0625, 1e-15);
    EXPECT_NEAR(tf[2048], by_hand, 1e-7);
}

TEST(Operator, AgreesWithDirectEvaluation) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.02, 0.98);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = u(rng);
        const double b = u(rng);
        const auto spec = paradise(a, b);
        const auto f = test_support::random_admissible(rng, 200);
        const auto tf = apply_T(spec, f);
        const std::vector<double> v(f.values().begin(), f.values().end());
        for (std::size_t i = 0; i <= 200; ++i) {
            const double x = static_cast<double>(i) / 200.0;
            const double y1 = std::min(1.0, a * x + 1.0 - a);
            const double expect = x * test_support::interpolate(v, y1) + (1.0 - x) * test_support::interpolate(v, b * x);
            ASSERT_NEAR(tf[i], expect, 1e-12 * (1.0 + std::abs(expect))) << "alpha=" << a << " beta=" << b;
        }
    }
}

TEST(Operator, PreservesAdmissibility) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto tf = apply_T(paradise(u(rng), u(rng)), test_support::random_admissible(rng, 97));
        ASSERT_EQ(tf[0], 0.0);
        ASSERT_EQ(tf[97], 1.0);
    }
}

TEST(Operator, RejectsInadmissibleInputAndShapeMismatch) {
    const DiscreteOperator op(paradise(0.2, 0.4), 64);
    EXPECT_THROW(op.apply(GridFunction::zero(64)), PreconditionError);
    EXPECT_THROW(op.apply(GridFunction::identity(32)), ShapeError);
}

TEST(Operator, RangeViolationNamesTheNode) {
    const auto spec = custom([](double x) { return x; }, [](double x) { return 2.0 * x; },
                             [](double x) { return 0.5 * x; });
    try {
        DiscreteOperator op(spec, 8);
        FAIL() << "expected RangeError";
    } catch (const RangeError& e) {
        EXPECT_NE(std::string(e.what()).find("phi1"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("node"), std::string::npos);
    }
}

TEST(Operator, BrokenBoundaryIsAPreconditionError) {
    const auto spec = custom([](double x) { return 0.5 + 0.5 * x; }, [](double) { return 1.0; },
                             [](double x) { return 0.5 * x; });
    EXPECT_THROW(apply_T(spec, GridFunction::identity(16)), PreconditionError);
}

TEST(Operator, EvaluationFailureCarriesLocation) {
    const auto spec = custom(
        [](double x) {
            if (x > 0.4 && x < 0.6) throw std::runtime_error("boom");
            return x;
        },
        [](double) { return 1.0; }, [](double) { return 0.0; });
    try {
        apply_T(spec, GridFunction::identity(10));
        FAIL() << "expected EvaluationError";
    } catch (const EvaluationError& e) {
        EXPECT_DOUBLE_EQ(e.x(), 0.5);
        EXPECT_NE(std::string(e.what()).find("phi"), std::string::npos);
    }
    const auto nan_spec = custom([](double x) { return x == 0.0 ? std::nan("") : x; }, [](double) { return 1.0; },
                                 [](double) { return 0.0; });
    EXPECT_THROW(apply_T(nan_spec, GridFunction::identity(10)), EvaluationError);
}

// Norm bound: |Tf| <= (2|phi|(|phi1| + |phi2|) - |phi| phi1(0)) |f|, and the
// contraction bound |Tf - Tg| <= c |f - g| on admissible pairs.
TEST(OperatorProperty, NormAndContractionBoundsOnRandomPairs) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    constexpr std::size_t n = 256;
    for (int trial = 0; trial < 100; ++trial) {
        const double a = u(rng);
        const double b = u(rng);
        const auto spec = paradise(a, b);
        const auto rep = certify(spec, n);
        const DiscreteOperator op(spec, n);
        const auto f = test_support::random_admissible(rng, n);
        const auto g = test_support::random_admissible(rng, n);
        const auto tf = op.apply(f);
        const auto tg = op.apply(g);
        const double slack = 1e-9;
        ASSERT_LE(lipschitz_norm(tf), rep.operator_norm_bound * lipschitz_norm(f) * (1 + slack) + slack)
            << "alpha=" << a << " beta=" << b;
        ASSERT_LE(distance(tf, tg, Metric::lip), rep.contraction_constant * distance(f, g, Metric::lip) * (1 + slack) + slack)
            << "alpha=" << a << " beta=" << b;
    }
}

// |phi(x) - 1| <= |phi| for phi in D^{0,1}.
TEST(OperatorProperty, DeviationFromOneBoundedByNorm) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const auto phi = test_support::random_admissible(rng, 128);
        const double norm = lipschitz_norm(phi);
        for (double y : phi.values()) ASSERT_LE(std::abs(y - 1.0), norm + 1e-12);
    }
}
