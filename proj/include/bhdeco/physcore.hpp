#pragma once

#include <numbers>

namespace bhdeco {

inline constexpr double kPi = std::numbers::pi;

/// Fundamental constants fixing every SI output. Defaults are CODATA 2018.
struct PhysicalConstants {
    double G = 6.67430e-11;        ///< m^3 kg^-1 s^-2
    double c = 2.99792458e8;       ///< m/s
    double hbar = 1.054571817e-34; ///< J s
    double k_B = 1.380649e-23;     ///< J/K

    /// Throws DomainError unless all four values are finite and positive.
    void validate() const;

    /// Copy with hbar multiplied by `factor`.
    PhysicalConstants with_hbar_scaled(double factor) const;
};

inline constexpr const char* kConstantsVersion = "CODATA-2018";

double schwarzschild_radius(double mass, const PhysicalConstants& k = {});
double hawking_temperature(double mass, const PhysicalConstants& k = {});
/// Same temperature evaluated from the radius form hbar c / (4 pi k_B r_s).
double hawking_temperature_from_radius(double r_s, const PhysicalConstants& k = {});
double planck_length(const PhysicalConstants& k = {});

/// Lifetime against evaporation into vacuum for a single massless mode:
/// 5120 pi G^2 M^3 / (hbar c^4).
double evaporation_time(double mass, const PhysicalConstants& k = {});

/// Quasi-static mass history M0 (1 - t/t_BH)^(1/3). Throws DomainError once
/// the hole has fully evaporated (t >= t_BH) or for t < 0.
double mass_at_time(double initial_mass, double t, const PhysicalConstants& k = {});

/// Schwarzschild black hole with its derived quantities cached.
class BlackHole {
public:
    explicit BlackHole(double mass, const PhysicalConstants& k = {});

    double mass() const noexcept { return mass_; }
    double schwarzschild_radius() const noexcept { return r_s_; }
    double hawking_temperature() const noexcept { return t_hawking_; }
    double evaporation_time() const noexcept { return t_evap_; }
    /// Light-crossing rate c/r_s, the natural unit for decoherence rates.
    double light_crossing_rate() const noexcept { return constants_.c / r_s_; }
    const PhysicalConstants& constants() const noexcept { return constants_; }

private:
    PhysicalConstants constants_;
    double mass_;
    double r_s_;
    double t_hawking_;
    double t_evap_;
};

}  // namespace bhdeco
