#pragma once

#include <complex>

namespace bhdeco::specfun {

using Complex = std::complex<double>;

/// Riemann zeta at an integer n >= 2. Odd arguments 3..9 come from a table,
/// everything else from Euler-Maclaurin summation. Relative error <= 1e-12.
double zeta_int(int n);

/// Trigamma psi^(1)(z) for complex z away from the poles 0, -1, -2, ...
///
/// Shifts z upward with psi1(z) = psi1(z+1) + 1/z^2 until |z| reaches the
/// asymptotic threshold, then sums
///   1/z + 1/(2 z^2) + sum_k B_2k / z^(2k+1)   (Bernoulli numbers up to B_12).
/// Arguments with Re z < 0.5 are first mapped through the reflection formula.
Complex trigamma(Complex z);

/// Unnormalized sinc, sin(x)/x, with sinc(0) = 1.
double sinc(double x);

/// 1 - sinc(x), evaluated without cancellation for small |x|.
double sinc_complement(double x);

}  // namespace bhdeco::specfun
