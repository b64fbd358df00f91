#include "bhdeco/evolve.hpp"

#include <cmath>
#include <limits>

#include "bhdeco/errors.hpp"

namespace bhdeco {

double rate_at_mass(double delta_x, double mass, const EvolveOptions& opts) {
    const PhysicalConstants& k = opts.rate.constants;
    const SuperpositionGeometry geom{delta_x, schwarzschild_radius(mass, k)};
    if (opts.mode == EnvironmentMode::thermal) {
        return thermal_bh_rate(geom, k, opts.rate.species_multiplicity);
    }
    return vacuum_rate(geom, opts.rate).rate;
}

CoherenceTrace evolve_coherence(double delta_x, double initial_mass, double t_max, int steps,
                                const EvolveOptions& opts) {
    if (steps < 2) {
        throw DomainError("evolution needs at least 2 steps");
    }
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw DomainError("t_max must be positive and finite");
    }
    if (!(delta_x >= 0.0)) {
        throw DomainError("separation must be non-negative");
    }
    const PhysicalConstants& k = opts.rate.constants;
    const double lifetime = evaporation_time(initial_mass, k);
    if (opts.evaporate && t_max >= lifetime) {
        throw DomainError("t_max reaches the evaporation lifetime; the hole is gone");
    }

    const auto n = static_cast<std::size_t>(steps) + 1;
    const double h = t_max / steps;
    CoherenceTrace trace;
    trace.times.resize(n);
    trace.mass.resize(n);
    std::vector<double> rate(n);
    for (std::size_t i = 0; i < n; ++i) {
        trace.times[i] = (i + 1 == n) ? t_max : h * static_cast<double>(i);
        trace.mass[i] = opts.evaporate ? mass_at_time(initial_mass, trace.times[i], k)
                                       : initial_mass;
        rate[i] = rate_at_mass(delta_x, trace.mass[i], opts);
    }

    // Cumulative Simpson: even nodes get the composite rule, odd nodes add the
    // quadratic-interpolant integral over their last interval.
    std::vector<double> exponent(n, 0.0);
    for (std::size_t i = 2; i < n; i += 2) {
        exponent[i] = exponent[i - 2] + h / 3.0 * (rate[i - 2] + 4.0 * rate[i - 1] + rate[i]);
    }
    for (std::size_t i = 1; i < n; i += 2) {
        if (i + 1 < n) {
            exponent[i] = exponent[i - 1] +
                          h / 12.0 * (5.0 * rate[i - 1] + 8.0 * rate[i] - rate[i + 1]);
        } else {
            exponent[i] = exponent[i - 1] +
                          h / 12.0 * (-rate[i - 2] + 8.0 * rate[i - 1] + 5.0 * rate[i]);
        }
    }

    trace.log_coherence.resize(n);
    trace.coherence.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        trace.log_coherence[i] = -exponent[i];
        // Clamp underflow so the stored ratio stays strictly positive.
        trace.coherence[i] =
            std::max(std::exp(-exponent[i]), std::numeric_limits<double>::denorm_min());
    }

    const double tau0 = rate[0] > 0.0 ? 1.0 / rate[0] : std::numeric_limits<double>::infinity();
    trace.initial_decoherence_time = tau0;
    trace.quasi_static_valid = tau0 < 0.01 * lifetime;
    return trace;
}

}  // namespace bhdeco
