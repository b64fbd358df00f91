#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bhdeco/errors.hpp"
#include "bhdeco/physcore.hpp"
#include "test_support.hpp"

namespace bhdeco {
namespace {

using testing::rel_diff;

TEST(SchwarzschildRadius, KnownMasses) {
    // 2 G M / c^2 by hand
    EXPECT_NEAR(schwarzschild_radius(1.99e30), 2955.61, 0.01);
    EXPECT_NEAR(schwarzschild_radius(5.97e24), 8.866e-3, 1e-6);
    EXPECT_DOUBLE_EQ(schwarzschild_radius(2.0e30), 2.0 * schwarzschild_radius(1.0e30));
}

TEST(SchwarzschildRadius, RejectsNonPositiveMass) {
    EXPECT_THROW(schwarzschild_radius(0.0), DomainError);
    EXPECT_THROW(schwarzschild_radius(-1.0), DomainError);
    EXPECT_THROW(hawking_temperature(0.0), DomainError);
    EXPECT_THROW(evaporation_time(-3.0), DomainError);
    EXPECT_THROW(BlackHole(0.0), DomainError);
}

TEST(HawkingTemperature, PublishedValues) {
    EXPECT_LT(rel_diff(hawking_temperature(1.99e30), 6.17e-8), 5e-3);
    EXPECT_LT(rel_diff(hawking_temperature(5.97e24), 0.0205), 5e-3);
    EXPECT_LT(rel_diff(hawking_temperature(7.35e22), 1.67), 5e-3);
}

TEST(HawkingTemperature, MassAndRadiusFormsAgree) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log_mass(0.0, 40.0);
    const PhysicalConstants k;
    const double product = k.hbar * std::pow(k.c, 3) / (8.0 * kPi * k.G * k.k_B);
    for (int i = 0; i < 500; ++i) {
        const double m = std::pow(10.0, log_mass(rng));
        const double t = hawking_temperature(m);
        EXPECT_LT(rel_diff(t, hawking_temperature_from_radius(schwarzschild_radius(m))), 1e-14);
        EXPECT_LT(rel_diff(t * m, product), 1e-12);
    }
}

TEST(PlanckLength, DefaultsAndScaling) {
    const PhysicalConstants k;
    EXPECT_LT(rel_diff(planck_length(), 1.616255e-35), 1e-5);
    const double lp = planck_length(k);
    EXPECT_NEAR(lp * lp * std::pow(k.c, 3) / (k.hbar * k.G), 1.0, 1e-14);
    EXPECT_LT(rel_diff(planck_length(k.with_hbar_scaled(4.0)), 2.0 * lp), 1e-15);
}

TEST(EvaporationTime, CubicScaling) {
    EXPECT_LT(rel_diff(evaporation_time(2e20) / evaporation_time(1e20), 8.0), 1e-14);
    const PhysicalConstants k;
    const double one_kg = 5120.0 * kPi * k.G * k.G / (k.hbar * std::pow(k.c, 4));
    EXPECT_DOUBLE_EQ(evaporation_time(1.0), one_kg);
    EXPECT_NEAR(one_kg, 8.4e-17, 0.05e-17);
}

TEST(MassAtTime, EndpointsAndCubeRoot) {
    const double m0 = 1e12;
    const double life = evaporation_time(m0);
    EXPECT_EQ(mass_at_time(m0, 0.0), m0);
    EXPECT_LT(rel_diff(mass_at_time(m0, 7.0 / 8.0 * life), 0.5 * m0), 1e-14);
    EXPECT_THROW(mass_at_time(m0, life), DomainError);
    EXPECT_THROW(mass_at_time(m0, 2.0 * life), DomainError);
    EXPECT_THROW(mass_at_time(m0, -1.0), DomainError);
}

TEST(MassAtTime, RemainingLifetimeIdentityAndMonotone) {
    const double m0 = 3e11;
    const double life = evaporation_time(m0);
    double previous = m0;
    for (int i = 1; i < 1000; ++i) {
        const double t = life * i / 1000.0;
        const double m = mass_at_time(m0, t);
        EXPECT_LT(m, previous);
        EXPECT_LT(rel_diff(evaporation_time(m), life - t), 1e-10) << "t/life=" << i / 1000.0;
        previous = m;
    }
}

TEST(BlackHole, CachesDerivedQuantities) {
    const BlackHole hole(5.97e24);
    EXPECT_DOUBLE_EQ(hole.schwarzschild_radius(), schwarzschild_radius(5.97e24));
    EXPECT_DOUBLE_EQ(hole.hawking_temperature(), hawking_temperature(5.97e24));
    EXPECT_DOUBLE_EQ(hole.evaporation_time(), evaporation_time(5.97e24));
    EXPECT_DOUBLE_EQ(hole.light_crossing_rate(), 2.99792458e8 / hole.schwarzschild_radius());
}

TEST(PhysicalConstants, Validation) {
    PhysicalConstants k;
    EXPECT_NO_THROW(k.validate());
    k.G = 0.0;
    EXPECT_THROW(k.validate(), DomainError);
    EXPECT_THROW(PhysicalConstants{}.with_hbar_scaled(-1.0), DomainError);
}

}  // namespace
}  // namespace bhdeco
