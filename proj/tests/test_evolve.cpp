#include <gtest/gtest.h>

#include <cmath>

#include "bhdeco/errors.hpp"
#include "bhdeco/evolve.hpp"
#include "test_support.hpp"

namespace bhdeco {
namespace {

using testing::rel_diff;

constexpr double kSun = 1.99e30;

// Light hole whose constant-mass coherence falls to about 1/e at half its
// lifetime, so evaporation visibly speeds up decoherence.
struct SmallHole {
    double mass = 1e11;
    double lifetime = evaporation_time(1e11);
    double dx = 0.0;
    SmallHole() {
        const double r_s = schwarzschild_radius(mass);
        const double target_rate = 1.0 / (0.5 * lifetime);
        dx = r_s * std::sqrt(target_rate / (small_dx_prefactor() * 2.99792458e8 / r_s));
    }
};

void expect_trace_invariants(const CoherenceTrace& t) {
    ASSERT_FALSE(t.coherence.empty());
    EXPECT_EQ(t.coherence.front(), 1.0);
    for (std::size_t i = 1; i < t.coherence.size(); ++i) {
        EXPECT_LE(t.coherence[i], t.coherence[i - 1]);
        EXPECT_GT(t.coherence[i], 0.0);
        EXPECT_LE(t.mass[i], t.mass[i - 1]);
        EXPECT_GT(t.mass[i], 0.0);
        EXPECT_GT(t.times[i], t.times[i - 1]);
    }
}

TEST(Evolve, ConstantMassHitsInverseE) {
    const double tau = vacuum_rate({0.01, schwarzschild_radius(kSun)}).decoherence_time();
    const CoherenceTrace t = evolve_coherence(0.01, kSun, tau, 100);
    EXPECT_NEAR(t.coherence.back(), std::exp(-1.0), 1e-6);
    EXPECT_DOUBLE_EQ(t.times.back(), tau);
    EXPECT_TRUE(t.quasi_static_valid);
    EXPECT_LT(rel_diff(t.initial_decoherence_time, tau), 1e-15);
    expect_trace_invariants(t);
}

TEST(Evolve, ConstantMassMatchesClosedExponentialEverywhere) {
    const double rate = vacuum_rate({0.01, schwarzschild_radius(5.97e24)}).rate;
    for (int steps : {2, 7, 100}) {
        const CoherenceTrace t = evolve_coherence(0.01, 5.97e24, 3.0 / rate, steps);
        for (std::size_t i = 0; i < t.times.size(); ++i) {
            EXPECT_NEAR(t.log_coherence[i], -rate * t.times[i], 1e-14 * (1.0 + rate * t.times[i]));
            EXPECT_LT(rel_diff(t.coherence[i], std::exp(-rate * t.times[i])), 1e-13);
        }
    }
}

TEST(Evolve, LogCoherenceLinearInRate) {
    EvolveOptions doubled;
    doubled.rate.species_multiplicity = 2;
    const CoherenceTrace one = evolve_coherence(0.01, 5.97e24, 1e-6, 50);
    const CoherenceTrace two = evolve_coherence(0.01, 5.97e24, 1e-6, 50, doubled);
    for (std::size_t i = 0; i < one.times.size(); ++i) {
        EXPECT_NEAR(two.log_coherence[i], 2.0 * one.log_coherence[i],
                    1e-14 * std::abs(one.log_coherence[i]) + 1e-300);
    }
}

TEST(Evolve, EvaporationOnlySpeedsDecoherence) {
    const SmallHole h;
    EvolveOptions evap;
    evap.evaporate = true;
    const CoherenceTrace fixed = evolve_coherence(h.dx, h.mass, 0.5 * h.lifetime, 200);
    const CoherenceTrace shrinking = evolve_coherence(h.dx, h.mass, 0.5 * h.lifetime, 200, evap);
    EXPECT_NEAR(fixed.coherence.back(), std::exp(-1.0), 1e-9);
    for (std::size_t i = 1; i < fixed.times.size(); ++i) {
        EXPECT_LT(shrinking.coherence[i], fixed.coherence[i]);
        // rate grows pointwise as the mass shrinks
        EXPECT_GT(rate_at_mass(h.dx, shrinking.mass[i], evap), rate_at_mass(h.dx, h.mass, evap));
    }
    EXPECT_FALSE(shrinking.quasi_static_valid);
    expect_trace_invariants(shrinking);

    // Sun-mass hole: evaporation is negligible, traces agree.
    const double tau = vacuum_rate({0.01, schwarzschild_radius(kSun)}).decoherence_time();
    const CoherenceTrace sun_fixed = evolve_coherence(0.01, kSun, 5.0 * tau, 100);
    const CoherenceTrace sun_evap = evolve_coherence(0.01, kSun, 5.0 * tau, 100, evap);
    for (std::size_t i = 0; i < sun_fixed.times.size(); ++i) {
        EXPECT_LE(sun_evap.coherence[i], sun_fixed.coherence[i]);
    }
}

TEST(Evolve, EvaporatingTraceMatchesAnalyticExponent) {
    // In the quadratic regime rate ~ 1/M^3 ~ 1/(1 - t/t_BH), so the exponent is
    // -rate0 t_BH ln(1 - t/t_BH).
    const SmallHole h;
    EvolveOptions evap;
    evap.evaporate = true;
    const CoherenceTrace t = evolve_coherence(h.dx, h.mass, 0.5 * h.lifetime, 400, evap);
    const double rate0 = rate_at_mass(h.dx, h.mass, evap);
    const double expected = rate0 * h.lifetime * std::log(1.0 - 0.5);
    EXPECT_LT(rel_diff(t.log_coherence.back(), expected), 1e-9);
}

TEST(Evolve, GridDoublingConverges) {
    const SmallHole h;
    EvolveOptions evap;
    evap.evaporate = true;
    const double a = evolve_coherence(h.dx, h.mass, 0.5 * h.lifetime, 400, evap).coherence.back();
    const double b = evolve_coherence(h.dx, h.mass, 0.5 * h.lifetime, 800, evap).coherence.back();
    EXPECT_LT(rel_diff(a, b), 1e-8);
}

TEST(Evolve, ThermalMode) {
    EvolveOptions thermal;
    thermal.mode = EnvironmentMode::thermal;
    const double r_s = schwarzschild_radius(5.97e24);
    const double rate = thermal_bh_rate({0.01, r_s});
    const CoherenceTrace t = evolve_coherence(0.01, 5.97e24, 2.0 / rate, 10, thermal);
    EXPECT_NEAR(t.coherence.back(), std::exp(-2.0), 1e-12);
}

TEST(Evolve, Errors) {
    const SmallHole h;
    EvolveOptions evap;
    evap.evaporate = true;
    EXPECT_THROW(evolve_coherence(h.dx, h.mass, h.lifetime, 10, evap), DomainError);
    EXPECT_THROW(evolve_coherence(h.dx, h.mass, 1.0, 1), DomainError);
    EXPECT_THROW(evolve_coherence(h.dx, h.mass, 0.0, 10), DomainError);
    EXPECT_THROW(evolve_coherence(-1.0, h.mass, 1.0, 10), DomainError);
    EXPECT_THROW(evolve_coherence(h.dx, -1.0, 1.0, 10), DomainError);
    // beyond the lifetime is fine without evaporation
    EXPECT_NO_THROW(evolve_coherence(h.dx, h.mass, 2.0 * h.lifetime, 10));
}

TEST(Evolve, ZeroSeparationNeverDecoheres) {
    const CoherenceTrace t = evolve_coherence(0.0, kSun, 1e9, 10);
    for (double c : t.coherence) {
        EXPECT_EQ(c, 1.0);
    }
    EXPECT_FALSE(t.quasi_static_valid);
}

}  // namespace
}  // namespace bhdeco
