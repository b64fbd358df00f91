#pragma once

#include <vector>

#include "bhdeco/decoherence.hpp"

namespace bhdeco {

struct EvolveOptions {
    bool evaporate = false;
    EnvironmentMode mode = EnvironmentMode::vacuum;
    RateOptions rate{};
};

/// Off-diagonal coherence |rho(x,x',t)/rho(x,x',0)| on a uniform time grid.
struct CoherenceTrace {
    std::vector<double> times;          ///< s
    std::vector<double> coherence;      ///< in (0, 1]
    std::vector<double> log_coherence;  ///< -int_0^t rate dt'
    std::vector<double> mass;           ///< kg
    /// Initial decoherence time below 1% of the initial lifetime.
    bool quasi_static_valid = false;
    double initial_decoherence_time = 0.0;
};

/// Decoherence rate of a hole of mass `mass` at fixed separation `delta_x`.
double rate_at_mass(double delta_x, double mass, const EvolveOptions& opts);

/// Integrates d rho / dt = -rate(M(t)) rho on `steps` uniform intervals over
/// [0, t_max]. With evaporation the mass follows the quasi-static history;
/// the exponent is accumulated with a cumulative Simpson rule, so a
/// constant rate reproduces exp(-rate t) to rounding.
CoherenceTrace evolve_coherence(double delta_x, double initial_mass, double t_max, int steps,
                                const EvolveOptions& opts = {});

}  // namespace bhdeco
