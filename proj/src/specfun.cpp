#include "bhdeco/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "bhdeco/errors.hpp"
#include "bhdeco/physcore.hpp"

namespace bhdeco::specfun {

namespace {

// B_2, B_4, ..., B_12
constexpr std::array<double, 6> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0,
};

constexpr double kAsymptoticThreshold = 10.0;

// Euler-Maclaurin for sum_{k>=1} k^-s with the head summed directly up to N-1.
double zeta_euler_maclaurin(int s) {
    constexpr int N = 16;
    double head = 0.0;
    for (int k = N - 1; k >= 1; --k) {
        head += std::pow(static_cast<double>(k), -s);
    }
    const double n = N;
    double tail = std::pow(n, 1 - s) / (s - 1) + 0.5 * std::pow(n, -s);
    // B_2j / (2j)! * s (s+1) ... (s+2j-2) * N^(-s-2j+1)
    double rising = s;  // s (s+1) ... (s+2j-2)
    double factorial = 2.0;
    for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
        const int two_j = static_cast<int>(2 * j);
        tail += kBernoulli[j - 1] / factorial * rising * std::pow(n, -s - two_j + 1);
        rising *= (s + two_j - 1) * (s + two_j);
        factorial *= (two_j + 1) * (two_j + 2);
    }
    return head + tail;
}

bool is_pole(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex trigamma_shifted(Complex z) {
    Complex acc{0.0, 0.0};
    while (std::abs(z) < kAsymptoticThreshold || z.real() < 0.5) {
        acc += 1.0 / (z * z);
        z += 1.0;
    }
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series{0.0, 0.0};
    Complex power = inv2 * inv;  // z^-3
    for (double b : kBernoulli) {
        series += b * power;
        power *= inv2;
    }
    return acc + inv + 0.5 * inv2 + series;
}

}  // namespace

double zeta_int(int n) {
    switch (n) {
        case 3: return 1.2020569031595942854;
        case 5: return 1.0369277551433699263;
        case 7: return 1.0083492773819228268;
        case 9: return 1.0020083928260822144;
        default: break;
    }
    if (n < 2) {
        throw DomainError("zeta_int requires n >= 2, got " + std::to_string(n));
    }
    if (n > 60) {
        // 2^-n below one ulp of 1 beyond this point
        return 1.0 + std::pow(2.0, -n) + std::pow(3.0, -n);
    }
    return zeta_euler_maclaurin(n);
}

Complex trigamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("trigamma argument must be finite");
    }
    if (is_pole(z)) {
        throw DomainError("trigamma has a pole at non-positive integer " +
                          std::to_string(z.real()));
    }
    if (z.real() < 0.5 && std::abs(z.imag()) < 20.0) {
        // psi1(1 - z) + psi1(z) = pi^2 / sin^2(pi z)
        const Complex s = std::sin(kPi * z);
        return kPi * kPi / (s * s) - trigamma_shifted(1.0 - z);
    }
    return trigamma_shifted(z);
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double sinc_complement(double x) {
    if (std::abs(x) < 1.0) {
        // sum_{k>=1} (-1)^(k+1) x^2k / (2k+1)!, truncated where x^2k/(2k+1)! < 1e-19
        const double x2 = x * x;
        double term = x2 / 6.0;
        double sum = 0.0;
        for (int k = 1; k <= 10; ++k) {
            sum += term;
            term *= -x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        }
        return sum;
    }
    return 1.0 - std::sin(x) / x;
}

}  // namespace bhdeco::specfun
