#pragma once

#include "bhdeco/physcore.hpp"
#include "bhdeco/quadrature.hpp"

namespace bhdeco {

/// Knobs on the geometric-optics Hawking spectrum.
struct SpectrumOptions {
    int polarizations = 2;
    int species_multiplicity = 1;
    /// Lower angular-frequency cutoff (rad/s) for massive species, m c^2 / hbar.
    double omega_min = 0.0;
};

/// Hawking emission spectrum of a Schwarzschild hole in the geometric-optics
/// approximation. Rates are per unit angular frequency:
///
///   Lambda(w) = mult * (pol/2) * 27 r_s^2 w^2 / (pi c^2) / (exp(4 pi w r_s / c) - 1)
///
/// Internally everything runs in the dimensionless frequency u = 4 pi w r_s / c.
class EmissionSpectrum {
public:
    EmissionSpectrum(double r_s, const SpectrumOptions& options = {},
                     const PhysicalConstants& k = {});

    static EmissionSpectrum for_black_hole(const BlackHole& hole,
                                           const SpectrumOptions& options = {});

    double schwarzschild_radius() const noexcept { return r_s_; }
    const SpectrumOptions& options() const noexcept { return options_; }
    double speed_of_light() const noexcept { return c_; }

    /// u = 4 pi w r_s / c
    double to_dimensionless(double omega) const noexcept;
    double from_dimensionless(double u) const noexcept;
    double u_min() const noexcept { return to_dimensionless(options_.omega_min); }

    /// Emission rate per unit angular frequency, s^-1 per (rad/s). Zero below
    /// the cutoff and at w = 0; negative w is a DomainError.
    double rate_density(double omega) const;

    /// Closed form 27 zeta(3) c / (32 pi^4 r_s) (times the scaling knobs) when
    /// there is no cutoff; numeric integration of rate_density otherwise.
    double total_emission_rate(const QuadratureSpec& quad = {}) const;

    /// Always integrates rate_density numerically.
    double total_emission_rate_numeric(const QuadratureSpec& quad = {}) const;

    /// rate_density / total_emission_rate
    double frequency_pdf(double omega, const QuadratureSpec& quad = {}) const;

private:
    /// mult * pol / 2
    double scale() const noexcept;

    double r_s_;
    SpectrumOptions options_;
    double c_;
};

namespace spectra {

/// Upper end of the truncated u-domain: exp(-u) = 1e-18.
double u_truncation();

/// Analytic bound on the Bose tail integral of u^2/(e^u - 1) beyond `u_max`.
double bose_tail_bound(double u_max);

/// u^2 / (e^u - 1), the dimensionless spectral shape (0 at u = 0).
double planck_shape(double u);

/// Lambda_total in units of c/r_s for one massless species, 27 zeta(3)/(32 pi^4).
double total_rate_coefficient();

/// Integral of planck_shape over [u_min, u_truncation()].
QuadratureResult planck_shape_integral(double u_min, const QuadratureSpec& quad = {});

}  // namespace spectra

}  // namespace bhdeco
