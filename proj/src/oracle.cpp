#include "bhdeco/oracle.hpp"

#include <cmath>
#include <vector>

#include "bhdeco/errors.hpp"

namespace bhdeco::oracle {

namespace {

std::vector<double> partition(double u_min, double u_max, double alpha) {
    std::vector<double> bp{u_min};
    if (alpha > 1.0) {
        const double step = kPi / alpha;
        for (long k = static_cast<long>(std::floor(u_min / step)) + 1;; ++k) {
            const double u = k * step;
            if (u >= u_max) {
                break;
            }
            if (u > u_min) {
                bp.push_back(u);
            }
        }
    } else {
        for (double x : {1.0, 4.0, 10.0, 20.0}) {
            if (x > u_min && x < u_max) {
                bp.push_back(x);
            }
        }
    }
    bp.push_back(u_max);
    return bp;
}

Estimate normalization(const EmissionSpectrum& spectrum, const QuadratureSpec& quad) {
    if (spectrum.options().omega_min == 0.0) {
        return {2.0 * specfun::zeta_int(3), 0.0};
    }
    const QuadratureResult r = spectra::planck_shape_integral(spectrum.u_min(), quad);
    return {r.value, r.error_estimate};
}

template <typename Kernel>
Estimate weighted_average(const SuperpositionGeometry& geom, const EmissionSpectrum& spectrum,
                          const QuadratureSpec& quad, Kernel kernel) {
    geom.validate();
    const double u_min = spectrum.u_min();
    const double u_max = spectra::u_truncation();
    if (!(u_min < u_max)) {
        throw DomainError("cutoff lies beyond the truncated spectrum");
    }
    const double alpha = geom.alpha();
    const auto bp = partition(u_min, u_max, alpha);
    const QuadratureResult num = integrate(
        [&](double u) { return spectra::planck_shape(u) * kernel(alpha * u); }, bp, quad);
    const Estimate den = normalization(spectrum, quad);
    const double value = num.value / den.value;
    const double err = num.error_estimate / den.value +
                       std::abs(value) * den.error_estimate / den.value;
    return {value, err};
}

}  // namespace

Estimate overlap_numeric(const SuperpositionGeometry& geom, const EmissionSpectrum& spectrum,
                         const QuadratureSpec& quad) {
    return weighted_average(geom, spectrum, quad,
                            [](double x) { return specfun::sinc(x); });
}

Estimate overlap_deficit_numeric(const SuperpositionGeometry& geom,
                                 const EmissionSpectrum& spectrum,
                                 const QuadratureSpec& quad) {
    if (geom.delta_x == 0.0) {
        geom.validate();
        return {0.0, 0.0};
    }
    return weighted_average(geom, spectrum, quad,
                            [](double x) { return specfun::sinc_complement(x); });
}

Estimate rate_numeric(const SuperpositionGeometry& geom, const EmissionSpectrum& spectrum,
                      const QuadratureSpec& quad) {
    const double lambda = spectrum.total_emission_rate_numeric(quad);
    const Estimate deficit = overlap_deficit_numeric(geom, spectrum, quad);
    return {lambda * deficit.value, lambda * deficit.error_estimate};
}

ComplexEstimate trigamma_series(specfun::Complex z, int terms) {
    if (terms < 100) {
        throw DomainError("trigamma_series needs at least 100 terms");
    }
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw DomainError("trigamma pole");
    }
    specfun::Complex sum{0.0, 0.0};
    // Smallest terms first.
    for (int n = terms - 1; n >= 0; --n) {
        const specfun::Complex w = z + static_cast<double>(n);
        sum += 1.0 / (w * w);
    }
    const specfun::Complex zn = z + static_cast<double>(terms);
    sum += 1.0 / zn + 0.5 / (zn * zn);
    const double bound = 1.0 / (6.0 * std::pow(std::abs(zn), 3));
    return {sum, bound};
}

Estimate zeta_series(int s, int terms) {
    if (s < 2 || terms < 2) {
        throw DomainError("zeta_series needs s >= 2 and terms >= 2");
    }
    double sum = 0.0;
    for (int k = terms - 1; k >= 1; --k) {
        sum += std::pow(static_cast<double>(k), -s);
    }
    const double n = terms;
    sum += std::pow(n, 1 - s) / (s - 1) + 0.5 * std::pow(n, -s);
    return {sum, s * std::pow(n, -(s + 1)) / 12.0};
}

}  // namespace bhdeco::oracle
