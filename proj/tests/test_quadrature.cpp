#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "bhdeco/errors.hpp"
#include "bhdeco/physcore.hpp"
#include "bhdeco/quadrature.hpp"

namespace bhdeco {
namespace {

TEST(Integrate, PolynomialsExact) {
    const auto r = integrate([](double x) { return x * x * x - 2.0 * x + 1.0; }, 0.0, 2.0);
    EXPECT_NEAR(r.value, 4.0 - 4.0 + 2.0, 1e-14);
    EXPECT_EQ(r.subdivisions, 0);
    EXPECT_EQ(r.evaluations, 15);
}

TEST(Integrate, SmoothTranscendental) {
    const auto r = integrate([](double x) { return std::exp(-x) * std::cos(3.0 * x); }, 0.0, 40.0);
    // int_0^inf e^-x cos 3x = 1/10; tail below e^-40
    EXPECT_NEAR(r.value, 0.1, 1e-12);
    EXPECT_LE(std::abs(r.value - 0.1), r.error_estimate + 1e-16);
}

TEST(Integrate, EndpointSingularityRefines) {
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    EXPECT_NEAR(r.value, 2.0, 1e-9);
    EXPECT_GT(r.subdivisions, 0);
}

TEST(Integrate, BreakpointPartition) {
    std::vector<double> bp;
    for (int k = 0; k <= 50; ++k) {
        bp.push_back(k * kPi);
    }
    const auto r = integrate([](double x) { return std::sin(x) * std::sin(x); }, bp);
    EXPECT_NEAR(r.value, 25.0 * kPi, 1e-10);
}

TEST(Integrate, BudgetExhaustionReportsEstimate) {
    QuadratureSpec spec;
    spec.max_subdivisions = 3;
    spec.rel_tol = 1e-14;
    try {
        integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, spec);
        FAIL() << "expected AccuracyError";
    } catch (const AccuracyError& e) {
        EXPECT_GT(e.achieved_error(), 0.0);
    }
}

TEST(Integrate, InvalidInput) {
    QuadratureSpec bad;
    bad.rel_tol = 0.0;
    EXPECT_THROW(integrate([](double) { return 1.0; }, 0.0, 1.0, bad), DomainError);
    bad = {};
    bad.max_subdivisions = 0;
    EXPECT_THROW(integrate([](double) { return 1.0; }, 0.0, 1.0, bad), DomainError);
    const std::vector<double> one{0.0};
    EXPECT_THROW(integrate([](double) { return 1.0; }, one), DomainError);
    const std::vector<double> unsorted{0.0, 2.0, 1.0};
    EXPECT_THROW(integrate([](double) { return 1.0; }, unsorted), DomainError);
}

TEST(Integrate, Deterministic) {
    auto f = [](double x) { return std::exp(-x * x) * std::sin(40.0 * x); };
    // true value is ~0, so only an absolute target is meaningful
    QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    const auto a = integrate(f, -3.0, 5.0, spec);
    const auto b = integrate(f, -3.0, 5.0, spec);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.error_estimate, b.error_estimate);
}

}  // namespace
}  // namespace bhdeco
