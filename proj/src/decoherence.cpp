#include "bhdeco/decoherence.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bhdeco/errors.hpp"
#include "bhdeco/specfun.hpp"
#include "bhdeco/spectra.hpp"

namespace bhdeco {

namespace {

// Below this alpha the overlap deficit comes from its power series.
constexpr double kSeriesAlpha = 0.02;
constexpr double kImaginaryResidueTol = 1e-12;

double sphere_prefactor() {
    constexpr double factorial8 = 40320.0;
    return 16.0 * factorial8 * specfun::zeta_int(9) / (9.0 * kPi);
}

double total_rate(const SuperpositionGeometry& geom, const PhysicalConstants& k, int species) {
    SpectrumOptions so;
    so.species_multiplicity = species;
    return EmissionSpectrum(geom.r_s, so, k).total_emission_rate();
}

}  // namespace

void SuperpositionGeometry::validate() const {
    if (!(delta_x >= 0.0) || !std::isfinite(delta_x)) {
        throw DomainError("separation must be finite and non-negative");
    }
    if (!(r_s > 0.0) || !std::isfinite(r_s)) {
        throw DomainError("Schwarzschild radius must be positive");
    }
}

void ThermalBathParams::validate() const {
    if (!(radius_eff > 0.0) || !(temperature > 0.0)) {
        throw DomainError("effective radius and temperature must be positive");
    }
}

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::small_separation: return "small_separation";
        case Regime::crossover: return "crossover";
        case Regime::saturated: return "saturated";
    }
    return "unknown";
}

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::canonical_appendix: return "canonical_appendix";
        case Variant::printed_eq8: return "printed_eq8";
    }
    return "unknown";
}

std::string_view to_string(EnvironmentMode m) {
    switch (m) {
        case EnvironmentMode::vacuum: return "vacuum";
        case EnvironmentMode::thermal: return "thermal";
    }
    return "unknown";
}

Regime classify_regime(double separation_ratio) {
    if (separation_ratio < 1.0) {
        return Regime::small_separation;
    }
    if (separation_ratio > 100.0) {
        return Regime::saturated;
    }
    return Regime::crossover;
}

double DecoherenceResult::decoherence_time() const noexcept {
    if (rate == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / rate;
}

double vacuum_overlap(const SuperpositionGeometry& geom) {
    geom.validate();
    if (geom.delta_x == 0.0) {
        return 1.0;
    }
    using specfun::Complex;
    const double alpha = geom.alpha();
    const Complex plus = specfun::trigamma(Complex{1.0, alpha});
    const Complex minus = specfun::trigamma(Complex{1.0, -alpha});
    const Complex overlap =
        Complex{0.0, kPi * geom.r_s} * (plus - minus) / (geom.delta_x * specfun::zeta_int(3));
    if (std::abs(overlap.imag()) > kImaginaryResidueTol) {
        throw ConsistencyError("overlap has imaginary residue " +
                               std::to_string(overlap.imag()));
    }
    return overlap.real();
}

double vacuum_overlap_deficit(const SuperpositionGeometry& geom) {
    geom.validate();
    const double alpha = geom.alpha();
    if (alpha >= kSeriesAlpha) {
        return 1.0 - vacuum_overlap(geom);
    }
    // 1 - overlap = sum_{j>=1} (-1)^(j+1) (j+1) zeta(2j+3) alpha^(2j) / zeta(3)
    const double a2 = alpha * alpha;
    double power = a2;
    double sum = 0.0;
    for (int j = 1; j <= 12; ++j) {
        const double term = (j + 1) * specfun::zeta_int(2 * j + 3) * power;
        sum += (j % 2 == 1) ? term : -term;
        power *= a2;
    }
    return sum / specfun::zeta_int(3);
}

DecoherenceResult vacuum_rate(const SuperpositionGeometry& geom, const RateOptions& opts) {
    geom.validate();
    DecoherenceResult out;
    out.variant = opts.variant;
    out.regime = classify_regime(geom.separation_ratio());
    out.lambda_total = total_rate(geom, opts.constants, opts.species_multiplicity);
    out.overlap = vacuum_overlap(geom);
    const double deficit = vacuum_overlap_deficit(geom);
    const double prefactor = opts.variant == Variant::printed_eq8
                                 ? 27.0 * opts.constants.c * specfun::zeta_int(3) /
                                       (8.0 * std::pow(kPi, 4) * geom.r_s) *
                                       opts.species_multiplicity
                                 : out.lambda_total;
    out.rate = prefactor * deficit;
    return out;
}

double small_dx_prefactor() {
    return 27.0 * specfun::zeta_int(5) / (256.0 * std::pow(kPi, 6));
}

double vacuum_rate_small_dx(const SuperpositionGeometry& geom, const PhysicalConstants& k) {
    geom.validate();
    const double y = geom.separation_ratio();
    return small_dx_prefactor() * y * y * k.c / geom.r_s;
}

double vacuum_rate_saturation(const SuperpositionGeometry& geom, const PhysicalConstants& k) {
    geom.validate();
    return total_rate(geom, k, 1);
}

double thermal_sphere_rate(const ThermalBathParams& params, double delta_x,
                           const PhysicalConstants& k) {
    params.validate();
    if (!(delta_x >= 0.0)) {
        throw DomainError("separation must be non-negative");
    }
    // (k_B T)^9 / (c^8 hbar^9) = c (k_B T / (hbar c))^9, kept in range for tiny hbar
    const double inv_wavelength = k.k_B * params.temperature / (k.hbar * k.c);
    const double a3 = params.radius_eff * params.radius_eff * params.radius_eff;
    return sphere_prefactor() * a3 * a3 * delta_x * delta_x * k.c *
           std::pow(inv_wavelength, 9);
}

bool dipole_regime_ok(const ThermalBathParams& params, double delta_x,
                      const PhysicalConstants& k) {
    params.validate();
    const double wavelength = k.hbar * k.c / (k.k_B * params.temperature);
    return delta_x < wavelength;
}

double thermal_constant_d() {
    return sphere_prefactor() * std::pow(27.0, 3) / std::pow(4.0 * kPi, 9);
}

double thermal_bh_rate(const SuperpositionGeometry& geom, const PhysicalConstants& k,
                       int species_multiplicity) {
    geom.validate();
    const double y = geom.separation_ratio();
    return species_multiplicity * thermal_constant_d() * y * y * k.c / geom.r_s;
}

double thermal_bh_rate_via_sphere(const SuperpositionGeometry& geom,
                                  const PhysicalConstants& k) {
    geom.validate();
    ThermalBathParams params;
    params.radius_eff = std::sqrt(27.0) * geom.r_s;
    params.temperature = hawking_temperature_from_radius(geom.r_s, k);
    return thermal_sphere_rate(params, geom.delta_x, k);
}

double planck_localization_coefficient(EnvironmentMode mode) {
    switch (mode) {
        case EnvironmentMode::thermal:
            return 8.0 / thermal_constant_d();
        case EnvironmentMode::vacuum:
            return 8.0 * 256.0 * std::pow(kPi, 6) / (27.0 * specfun::zeta_int(5));
    }
    throw DomainError("unknown environment mode");
}

double planck_localization_time(double mass, EnvironmentMode mode, const PhysicalConstants& k) {
    if (!(mass > 0.0)) {
        throw DomainError("black hole mass must be positive");
    }
    const double c2 = k.c * k.c;
    return planck_localization_coefficient(mode) * k.G * k.G * mass * mass * mass /
           (k.hbar * c2 * c2);
}

}  // namespace bhdeco
