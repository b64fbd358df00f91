#include "bhdeco/physcore.hpp"

#include <cmath>
#include <string>

#include "bhdeco/errors.hpp"

namespace bhdeco {

namespace {

void require_positive_mass(double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw DomainError("black hole mass must be positive and finite, got " +
                          std::to_string(mass));
    }
}

}  // namespace

void PhysicalConstants::validate() const {
    for (double v : {G, c, hbar, k_B}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError("physical constants must be positive and finite");
        }
    }
}

PhysicalConstants PhysicalConstants::with_hbar_scaled(double factor) const {
    PhysicalConstants out = *this;
    out.hbar *= factor;
    out.validate();
    return out;
}

double schwarzschild_radius(double mass, const PhysicalConstants& k) {
    require_positive_mass(mass);
    return 2.0 * k.G * mass / (k.c * k.c);
}

double hawking_temperature(double mass, const PhysicalConstants& k) {
    require_positive_mass(mass);
    return k.hbar * k.c * k.c * k.c / (8.0 * kPi * k.G * mass * k.k_B);
}

double hawking_temperature_from_radius(double r_s, const PhysicalConstants& k) {
    if (!(r_s > 0.0)) {
        throw DomainError("Schwarzschild radius must be positive");
    }
    return k.hbar * k.c / (4.0 * kPi * k.k_B * r_s);
}

double planck_length(const PhysicalConstants& k) {
    return std::sqrt(k.hbar * k.G / (k.c * k.c * k.c));
}

double evaporation_time(double mass, const PhysicalConstants& k) {
    require_positive_mass(mass);
    const double c2 = k.c * k.c;
    return 5120.0 * kPi * k.G * k.G * mass * mass * mass / (k.hbar * c2 * c2);
}

double mass_at_time(double initial_mass, double t, const PhysicalConstants& k) {
    const double lifetime = evaporation_time(initial_mass, k);
    if (!(t >= 0.0)) {
        throw DomainError("time must be non-negative");
    }
    if (t >= lifetime) {
        throw DomainError("black hole has fully evaporated at t = " + std::to_string(t) +
                          " s (lifetime " + std::to_string(lifetime) + " s)");
    }
    return initial_mass * std::cbrt(1.0 - t / lifetime);
}

BlackHole::BlackHole(double mass, const PhysicalConstants& k)
    : constants_(k),
      mass_(mass),
      r_s_(bhdeco::schwarzschild_radius(mass, k)),
      t_hawking_(bhdeco::hawking_temperature(mass, k)),
      t_evap_(bhdeco::evaporation_time(mass, k)) {
    constants_.validate();
}

}  // namespace bhdeco
