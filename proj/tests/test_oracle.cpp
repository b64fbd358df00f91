#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "bhdeco/decoherence.hpp"
#include "bhdeco/errors.hpp"
#include "bhdeco/oracle.hpp"
#include "test_support.hpp"

namespace bhdeco::oracle {
namespace {

using testing::fixture;
using testing::rel_diff;

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) {
        g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    }
    return g;
}

EmissionSpectrum with_u_cutoff(double r_s, double u_min) {
    SpectrumOptions so;
    so.omega_min = EmissionSpectrum(r_s).from_dimensionless(u_min);
    return EmissionSpectrum(r_s, so);
}

TEST(OverlapNumeric, ZeroSeparationIsNormalization) {
    const EmissionSpectrum s(1.0);
    EXPECT_NEAR(overlap_numeric({0.0, 1.0}, s).value, 1.0, 1e-10);
    EXPECT_EQ(rate_numeric({0.0, 1.0}, s).value, 0.0);
    EXPECT_NEAR(overlap_numeric({0.0, 1.0}, with_u_cutoff(1.0, 2.0)).value, 1.0, 1e-10);
}

TEST(OverlapNumeric, MatchesTrigammaClosedFormAt4PiRs) {
    const SuperpositionGeometry g{4.0 * kPi, 1.0};
    const double numeric = overlap_numeric(g, EmissionSpectrum(1.0)).value;
    EXPECT_NEAR(numeric, 0.331, 1e-3);
    EXPECT_LT(rel_diff(numeric, vacuum_overlap(g)), 1e-8);
}

TEST(OverlapNumeric, CutoffRegression) {
    const SuperpositionGeometry g{4.0 * kPi, 1.0};
    const double with_cut = overlap_numeric(g, with_u_cutoff(1.0, 2.0)).value;
    EXPECT_GT(std::abs(with_cut - vacuum_overlap(g)), 0.1);
    EXPECT_LT(rel_diff(with_cut, fixture("overlap_dx_4pi_rs_umin2").value), 1e-8);
}

TEST(OverlapNumeric, GridAgreementThreeMasses) {
    for (double mass : {1e22, 3e26, 1e31}) {
        const double r_s = schwarzschild_radius(mass);
        const EmissionSpectrum s(r_s);
        for (double y : log_grid(1e-3, 1e4, 40)) {
            const SuperpositionGeometry g{y * r_s, r_s};
            const double closed = vacuum_overlap(g);
            EXPECT_LE(std::abs(overlap_numeric(g, s).value - closed),
                      1e-8 * std::max(1.0, std::abs(closed)))
                << "M=" << mass << " y=" << y;
            EXPECT_LT(rel_diff(rate_numeric(g, s).value, vacuum_rate(g).rate), 1e-8)
                << "M=" << mass << " y=" << y;
        }
    }
}

TEST(RateNumeric, MonotoneOnGrid) {
    const EmissionSpectrum s(1.0);
    double previous = 0.0;
    for (double y : log_grid(1e-3, 1e4, 60)) {
        const double r = rate_numeric({y, 1.0}, s).value;
        EXPECT_GE(r, previous) << y;
        previous = r;
    }
}

TEST(RateNumeric, HonestErrorEstimate) {
    QuadratureSpec loose;
    loose.rel_tol = 1e-6;
    QuadratureSpec tighter = loose;
    tighter.rel_tol = 0.5e-6;
    const EmissionSpectrum s(1.0);
    for (double y : {0.01, 1.0, 50.0, 3000.0}) {
        const SuperpositionGeometry g{y, 1.0};
        const Estimate a = overlap_numeric(g, s, loose);
        const Estimate b = overlap_numeric(g, s, tighter);
        EXPECT_LE(std::abs(a.value - b.value), a.error_estimate) << y;
        const Estimate ra = rate_numeric(g, s, loose);
        const Estimate rb = rate_numeric(g, s, tighter);
        EXPECT_LE(std::abs(ra.value - rb.value), ra.error_estimate) << y;
    }
}

TEST(RateNumeric, CutoffUsesReducedTotalRate) {
    const SuperpositionGeometry g{1e3, 1.0};
    const auto cut = with_u_cutoff(1.0, 2.0);
    const double r = rate_numeric(g, cut).value;
    EXPECT_LT(rel_diff(r / cut.total_emission_rate(), 1.0 - overlap_numeric(g, cut).value),
              1e-8);
}

TEST(RateNumeric, NonConvergenceRaisesAccuracyError) {
    QuadratureSpec starved;
    starved.rel_tol = 1e-15;
    starved.abs_tol = 1e-300;
    starved.max_subdivisions = 1;
    EXPECT_THROW(overlap_numeric({1.0, 1.0}, EmissionSpectrum(1.0), starved), AccuracyError);
}

TEST(TrigammaSeries, KnownValueAndBound) {
    const auto r = trigamma_series({1.0, 0.0}, 10000);
    EXPECT_NEAR(r.value.real(), kPi * kPi / 6.0, 1e-9);
    EXPECT_LT(r.error_bound, 1e-11);
    const auto moon = trigamma_series({1.0, 7.29}, 10000);
    EXPECT_NEAR(moon.value.imag(), -0.1368, 1e-4);
    EXPECT_THROW(trigamma_series({1.0, 0.0}, 50), DomainError);
    EXPECT_THROW(trigamma_series({-2.0, 0.0}, 1000), DomainError);
}

TEST(ZetaSeries, KnownValues) {
    EXPECT_NEAR(zeta_series(2).value, kPi * kPi / 6.0, 1e-13);
    EXPECT_NEAR(zeta_series(3).value, 1.2020569031595942, 1e-14);
}

}  // namespace
}  // namespace bhdeco::oracle
