#include "bhdeco/spectra.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "bhdeco/errors.hpp"
#include "bhdeco/specfun.hpp"

namespace bhdeco {

namespace spectra {

double u_truncation() { return 18.0 * std::log(10.0); }

double bose_tail_bound(double u_max) {
    // int_U^inf u^2 e^-u / (1 - e^-u) du <= (U^2 + 2U + 2) e^-U / (1 - e^-U)
    const double e = std::exp(-u_max);
    return (u_max * u_max + 2.0 * u_max + 2.0) * e / (1.0 - e);
}

double planck_shape(double u) {
    if (u == 0.0) {
        return 0.0;
    }
    return u * u / std::expm1(u);
}

double total_rate_coefficient() {
    return 27.0 * specfun::zeta_int(3) / (32.0 * std::pow(kPi, 4));
}

QuadratureResult planck_shape_integral(double u_min, const QuadratureSpec& quad) {
    const double u_max = u_truncation();
    if (!(u_min < u_max)) {
        return {};
    }
    std::vector<double> bp{u_min};
    for (double x : {1.0, 4.0, 10.0, 20.0}) {
        if (x > u_min) {
            bp.push_back(x);
        }
    }
    bp.push_back(u_max);
    return integrate(planck_shape, bp, quad);
}

}  // namespace spectra

EmissionSpectrum::EmissionSpectrum(double r_s, const SpectrumOptions& options,
                                   const PhysicalConstants& k)
    : r_s_(r_s), options_(options), c_(k.c) {
    k.validate();
    if (!(r_s > 0.0) || !std::isfinite(r_s)) {
        throw DomainError("Schwarzschild radius must be positive");
    }
    if (options.polarizations < 1) {
        throw DomainError("polarizations must be >= 1");
    }
    if (options.species_multiplicity < 1) {
        throw DomainError("species multiplicity must be >= 1");
    }
    if (!(options.omega_min >= 0.0) || !std::isfinite(options.omega_min)) {
        throw DomainError("omega_min must be finite and non-negative");
    }
}

EmissionSpectrum EmissionSpectrum::for_black_hole(const BlackHole& hole,
                                                  const SpectrumOptions& options) {
    return EmissionSpectrum(hole.schwarzschild_radius(), options, hole.constants());
}

double EmissionSpectrum::to_dimensionless(double omega) const noexcept {
    return 4.0 * kPi * omega * r_s_ / c_;
}

double EmissionSpectrum::from_dimensionless(double u) const noexcept {
    return u * c_ / (4.0 * kPi * r_s_);
}

double EmissionSpectrum::scale() const noexcept {
    return options_.species_multiplicity * (options_.polarizations / 2.0);
}

double EmissionSpectrum::rate_density(double omega) const {
    if (omega < 0.0 || std::isnan(omega)) {
        throw DomainError("angular frequency must be non-negative");
    }
    if (omega == 0.0 || omega < options_.omega_min) {
        return 0.0;
    }
    const double u = to_dimensionless(omega);
    return scale() * 27.0 * r_s_ * r_s_ * omega * omega / (kPi * c_ * c_) / std::expm1(u);
}

double EmissionSpectrum::total_emission_rate(const QuadratureSpec& quad) const {
    if (options_.omega_min > 0.0) {
        return total_emission_rate_numeric(quad);
    }
    return scale() * spectra::total_rate_coefficient() * c_ / r_s_;
}

double EmissionSpectrum::total_emission_rate_numeric(const QuadratureSpec& quad) const {
    // Lambda(w) dw = 27 c / (64 pi^4 r_s) * u^2/(e^u - 1) du
    const double integral = spectra::planck_shape_integral(u_min(), quad).value;
    return scale() * 27.0 * c_ / (64.0 * std::pow(kPi, 4) * r_s_) * integral;
}

double EmissionSpectrum::frequency_pdf(double omega, const QuadratureSpec& quad) const {
    return rate_density(omega) / total_emission_rate(quad);
}

}  // namespace bhdeco
