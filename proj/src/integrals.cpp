#include "screening/integrals.hpp"

#include <cmath>

#include "screening/curvature.hpp"

namespace screening {

namespace {

// ppv with its one-sided limit filled in at the single point where a
// non-degenerate curve is 0/0 (phi = 0 at perfect specificity, phi = 1 at
// zero sensitivity), so the integrand is defined on all of [0, 1].
double ppv_or_limit(const TestCharacteristics& test, double phi) {
    const double a = test.sensitivity();
    const double b = test.specificity();
    const double d = a * phi + (1.0 - b) * (1.0 - phi);
    if (d <= 0.0) return a > 0.0 ? 1.0 : 0.0;
    return a * phi / d;
}

double simpson(double lo, double hi, double f_lo, double f_mid, double f_hi) {
    return (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
}

template <typename F>
double adaptive_simpson(const F& f, double lo, double hi, double f_lo, double f_mid,
                        double f_hi, double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid);
    const double rm = 0.5 * (mid + hi);
    const double f_lm = f(lm);
    const double f_rm = f(rm);
    const double left = simpson(lo, mid, f_lo, f_lm, f_mid);
    const double right = simpson(mid, hi, f_mid, f_rm, f_hi);
    const double err = (left + right - whole) / 15.0;
    if (depth <= 0 || std::abs(err) <= tol) return left + right + err;
    return adaptive_simpson(f, lo, mid, f_lo, f_lm, f_mid, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, mid, hi, f_mid, f_rm, f_hi, right, 0.5 * tol, depth - 1);
}

} // namespace

double antiderivative(const TestCharacteristics& test, double phi) {
    detail::require_probability(phi, "prevalence");
    const double a = test.sensitivity();
    const double b = test.specificity();
    const double j = test.youden_j();
    if (std::abs(j) <= kLinearTolerance) {
        throw MathError("antiderivative divides by the squared youden index; "
                        "it is singular on a linear curve (integrate phi^2/2 instead)");
    }
    const double arg = j * phi + (1.0 - b);
    if (arg == 0.0) {
        throw LogSingularityError(
            "antiderivative log argument vanished: the curve degenerates at this prevalence");
    }
    return a * ((b - 1.0) * std::log(std::abs(arg)) + j * phi) / (j * j);
}

double auc_quadrature(const TestCharacteristics& test, double lo, double hi) {
    detail::require_probability(lo, "lower integration limit");
    detail::require_probability(hi, "upper integration limit");
    if (lo > hi) {
        throw ValidationError("integration limits must be ordered low to high");
    }
    if (test.is_degenerate()) {
        throw DegenerateTestError("auc is undefined: the ppv curve is undefined everywhere");
    }
    if (lo == hi) return 0.0;

    constexpr double kTolerance = 1e-10;
    constexpr int kMaxDepth = 60;

    const auto f = [&test](double phi) { return ppv_or_limit(test, phi); };
    const double mid = 0.5 * (lo + hi);
    const double f_lo = f(lo);
    const double f_mid = f(mid);
    const double f_hi = f(hi);
    const double whole = simpson(lo, hi, f_lo, f_mid, f_hi);
    return adaptive_simpson(f, lo, hi, f_lo, f_mid, f_hi, whole, kTolerance, kMaxDepth);
}

AucReport auc(const TestCharacteristics& test) {
    if (test.is_degenerate()) {
        throw DegenerateTestError("auc is undefined: the ppv curve is undefined everywhere");
    }

    const double a = test.sensitivity();
    const double b = test.specificity();
    const double j = test.youden_j();

    double closed;
    if (std::abs(j) <= kLinearTolerance) {
        closed = 0.5;
    } else if (b >= 1.0) {
        closed = 1.0;
    } else if (a == 0.0) {
        closed = 0.0;
    } else {
        // F(1) - F(0) of the antiderivative, simplified to
        // (a / (1-b)) * (u - log1p(u)) / u^2 with u = J / (1-b), which sidesteps
        // the cancellation between the two F evaluations near the linear regime.
        const double c = 1.0 - b;
        const double u = j / c;
        double g;
        if (std::abs(u) < 1e-3) {
            g = 0.5 - u / 3.0 + u * u / 4.0 - u * u * u / 5.0 + u * u * u * u / 6.0;
        } else {
            g = (u - std::log1p(u)) / (u * u);
        }
        closed = (a / c) * g;
    }

    AucReport report{};
    report.auc_closed = closed;
    report.auc_numeric = auc_quadrature(test, 0.0, 1.0);
    report.residual = std::abs(report.auc_closed - report.auc_numeric);
    report.epsilon = test.epsilon();
    return report;
}

} // namespace screening
