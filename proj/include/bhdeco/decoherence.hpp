#pragma once

#include <string_view>

#include "bhdeco/physcore.hpp"

namespace bhdeco {

/// Two position branches of the hole separated by delta_x.
struct SuperpositionGeometry {
    double delta_x = 0.0;  ///< m
    double r_s = 1.0;      ///< m

    void validate() const;
    double separation_ratio() const noexcept { return delta_x / r_s; }
    /// alpha = delta_x / (4 pi r_s); sinc argument per unit of u.
    double alpha() const noexcept { return delta_x / (4.0 * kPi * r_s); }
};

enum class Regime { small_separation, crossover, saturated };
enum class Variant { canonical_appendix, printed_eq8 };
enum class EnvironmentMode { vacuum, thermal };

std::string_view to_string(Regime r);
std::string_view to_string(Variant v);
std::string_view to_string(EnvironmentMode m);

/// small_separation below delta_x/r_s = 1, saturated above 100. Reporting only.
Regime classify_regime(double separation_ratio);

struct DecoherenceResult {
    double rate = 0.0;          ///< s^-1
    double overlap = 1.0;       ///< <chi(x')|chi(x)>
    double lambda_total = 0.0;  ///< s^-1
    Regime regime = Regime::small_separation;
    Variant variant = Variant::canonical_appendix;

    /// 1/rate, +infinity when the rate vanishes.
    double decoherence_time() const noexcept;
};

struct RateOptions {
    Variant variant = Variant::canonical_appendix;
    int species_multiplicity = 1;
    PhysicalConstants constants{};
};

/// Effective scatterer radius and bath temperature for a dielectric sphere.
struct ThermalBathParams {
    double radius_eff = 0.0;   ///< m
    double temperature = 0.0;  ///< K

    void validate() const;
};

// --- vacuum ---------------------------------------------------------------

/// Overlap of the radiation states emitted from the two branches,
///   i pi r_s [psi1(1 + i alpha) - psi1(1 - i alpha)] / (delta_x zeta(3)).
/// Exactly 1 at delta_x = 0. Throws ConsistencyError if the complex
/// arithmetic leaves an imaginary residue above 1e-12.
double vacuum_overlap(const SuperpositionGeometry& geom);

/// 1 - vacuum_overlap, using the Taylor series in odd zeta values for small
/// alpha where the direct difference would cancel.
double vacuum_overlap_deficit(const SuperpositionGeometry& geom);

/// Emission-driven decoherence rate. canonical_appendix is
/// Lambda_total (1 - overlap); printed_eq8 keeps the printed prefactors
/// 27 c zeta(3) / (8 pi^4 r_s) and 27 i c / (8 pi^3 delta_x), which make it
/// four times larger.
DecoherenceResult vacuum_rate(const SuperpositionGeometry& geom, const RateOptions& opts = {});

/// Quadratic limit (27 zeta(5) / 256 pi^6) (dx/r_s)^2 (c/r_s).
double vacuum_rate_small_dx(const SuperpositionGeometry& geom, const PhysicalConstants& k = {});
double small_dx_prefactor();

/// Large-separation plateau, equal to the total emission rate.
double vacuum_rate_saturation(const SuperpositionGeometry& geom, const PhysicalConstants& k = {});

// --- thermal bath ---------------------------------------------------------

/// Dipole-regime scattering rate of a dielectric sphere in a photon bath:
///   (16 * 8! zeta(9) / 9 pi) a^6 dx^2 (k_B T)^9 / (c^8 hbar^9)
double thermal_sphere_rate(const ThermalBathParams& params, double delta_x,
                           const PhysicalConstants& k = {});

/// True when delta_x is below the dominant bath wavelength hbar c / (k_B T).
bool dipole_regime_ok(const ThermalBathParams& params, double delta_x,
                      const PhysicalConstants& k = {});

/// d = (16 * 8! zeta(9) / 9 pi) 27^3 / (4 pi)^9, about 0.0576.
double thermal_constant_d();

/// d (dx/r_s)^2 (c/r_s), times the species multiplicity.
double thermal_bh_rate(const SuperpositionGeometry& geom, const PhysicalConstants& k = {},
                       int species_multiplicity = 1);

/// Same rate through thermal_sphere_rate with a^2 = 27 r_s^2 and T = T_H.
double thermal_bh_rate_via_sphere(const SuperpositionGeometry& geom,
                                  const PhysicalConstants& k = {});

// --- Planck-length localization --------------------------------------------

/// Coefficient C in tau_D(l_p) = C G^2 M^3 / (hbar c^4).
double planck_localization_coefficient(EnvironmentMode mode);

double planck_localization_time(double mass, EnvironmentMode mode,
                                const PhysicalConstants& k = {});

}  // namespace bhdeco
