#include "bhdeco/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "bhdeco/errors.hpp"

namespace bhdeco {

namespace {

// Kronrod abscissae (positive half, descending) and weights; the odd-index
// nodes are shared with the 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel gauss_kronrod15(const std::function<double(double)>& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();

    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_center = f(center);

    double result_gauss = f_center * kWg[3];
    double result_kronrod = f_center * kWgk[7];
    double result_abs = std::abs(result_kronrod);
    std::array<double, 7> f1{};
    std::array<double, 7> f2{};

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const double sum = f1[j] + f2[j];
        result_kronrod += kWgk[j] * sum;
        result_abs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) {
            result_gauss += kWg[j / 2] * sum;
        }
    }

    const double mean = 0.5 * result_kronrod;
    double result_asc = kWgk[7] * std::abs(f_center - mean);
    for (int j = 0; j < 7; ++j) {
        result_asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    }

    result_kronrod *= half;
    result_abs *= std::abs(half);
    result_asc *= std::abs(half);

    double error = std::abs((result_kronrod - result_gauss * half));
    if (result_asc != 0.0 && error != 0.0) {
        error = result_asc * std::min(1.0, std::pow(200.0 * error / result_asc, 1.5));
    }
    if (result_abs > tiny / (50.0 * eps)) {
        error = std::max(50.0 * eps * result_abs, error);
    }
    return Panel{a, b, result_kronrod, error};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw DomainError("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw DomainError("max_subdivisions must be at least 1");
    }
}

QuadratureResult integrate(const std::function<double(double)>& f,
                           std::span<const double> breakpoints, const QuadratureSpec& spec) {
    spec.validate();
    if (breakpoints.size() < 2) {
        throw DomainError("integration needs at least two breakpoints");
    }

    std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
    double total = 0.0;
    double total_error = 0.0;
    QuadratureResult out;

    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) {
            throw DomainError("breakpoints must be strictly increasing");
        }
        Panel p = gauss_kronrod15(f, breakpoints[i], breakpoints[i + 1]);
        out.evaluations += 15;
        total += p.value;
        total_error += p.error;
        queue.push(p);
    }

    auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

    while (total_error > tolerance()) {
        if (out.subdivisions >= spec.max_subdivisions) {
            throw AccuracyError("quadrature did not converge within " +
                                    std::to_string(spec.max_subdivisions) + " subdivisions",
                                total_error);
        }
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            throw AccuracyError("quadrature interval collapsed below machine resolution",
                                total_error);
        }
        const Panel left = gauss_kronrod15(f, worst.a, mid);
        const Panel right = gauss_kronrod15(f, mid, worst.b);
        out.evaluations += 30;
        ++out.subdivisions;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    // Re-sum in left-to-right order so the result does not depend on the
    // refinement history of the running totals.
    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    out.value = 0.0;
    out.error_estimate = 0.0;
    for (const Panel& p : panels) {
        out.value += p.value;
        out.error_estimate += p.error;
    }
    return out;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
    const std::array<double, 2> bp = {a, b};
    return integrate(f, bp, spec);
}

}  // namespace bhdeco
