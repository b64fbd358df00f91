#pragma once

#include <functional>
#include <span>

namespace bhdeco {

/// Tolerances for the adaptive integrator.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    /// Bisections allowed on top of the caller's initial partition.
    int max_subdivisions = 10000;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    long evaluations = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod integration of `f` over the
/// partition given by `breakpoints` (sorted, at least two entries). The
/// interval with the largest local error is bisected until the summed error
/// estimate drops below max(abs_tol, rel_tol * |value|).
///
/// Throws AccuracyError carrying the achieved estimate when the subdivision
/// budget runs out first.
QuadratureResult integrate(const std::function<double(double)>& f,
                           std::span<const double> breakpoints,
                           const QuadratureSpec& spec = {});

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

}  // namespace bhdeco
