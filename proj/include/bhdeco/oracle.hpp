#pragma once

#include "bhdeco/decoherence.hpp"
#include "bhdeco/quadrature.hpp"
#include "bhdeco/specfun.hpp"
#include "bhdeco/spectra.hpp"

namespace bhdeco::oracle {

// Independent numerical route to the vacuum overlap and rate. Nothing here
// touches the trigamma closed forms, so agreement with `decoherence` is a
// genuine cross-check.

struct Estimate {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// (1/N) int_{u_min}^{u_max} u^2/(e^u - 1) sinc(alpha u) du with
/// alpha = delta_x / (4 pi r_s). N is 2 zeta(3) without a cutoff and the
/// numeric spectral integral otherwise. For alpha > 1 the domain is split at
/// the sinc zeros k pi / alpha.
Estimate overlap_numeric(const SuperpositionGeometry& geom, const EmissionSpectrum& spectrum,
                         const QuadratureSpec& quad = {});

/// Same normalization applied to int w(u) (1 - sinc(alpha u)) du, the
/// overlap deficit without cancellation at small alpha.
Estimate overlap_deficit_numeric(const SuperpositionGeometry& geom,
                                 const EmissionSpectrum& spectrum,
                                 const QuadratureSpec& quad = {});

/// Lambda_total (numeric) times overlap_deficit_numeric.
Estimate rate_numeric(const SuperpositionGeometry& geom, const EmissionSpectrum& spectrum,
                      const QuadratureSpec& quad = {});

struct ComplexEstimate {
    specfun::Complex value;
    double error_bound = 0.0;
};

/// sum_{n=0}^{N-1} 1/(z+n)^2 plus the tail 1/(z+N) + 1/(2 (z+N)^2).
/// The reported bound is the next Euler-Maclaurin term |1/(6 (z+N)^3)|.
ComplexEstimate trigamma_series(specfun::Complex z, int terms = 10000);

/// sum_{k=1}^{N-1} k^-s + N^(1-s)/(s-1) + N^-s / 2, bound s N^-(s+1) / 12.
Estimate zeta_series(int s, int terms = 100000);

}  // namespace bhdeco::oracle
