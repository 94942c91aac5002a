#include "screening/curvature.hpp"

#include <cmath>

namespace screening {

namespace {

double denom_at(const TestCharacteristics& test, double phi) {
    return test.sensitivity() * phi + (1.0 - test.specificity()) * (1.0 - phi);
}

} // namespace

const char* to_string(Concavity kind) {
    switch (kind) {
        case Concavity::concave: return "concave";
        case Concavity::linear: return "linear";
        case Concavity::convex: return "convex";
    }
    return "unknown";
}

ConcavityClass classify(const TestCharacteristics& test) {
    const double eps = test.epsilon();
    if (std::abs(eps - 1.0) <= kLinearTolerance) return {Concavity::linear, eps};
    return {eps > 1.0 ? Concavity::concave : Concavity::convex, eps};
}

double dppv_dphi(const TestCharacteristics& test, double phi) {
    detail::require_probability(phi, "prevalence");
    const double a = test.sensitivity();
    const double b = test.specificity();
    const double d = denom_at(test, phi);
    if (d <= 0.0) {
        throw DegenerateTestError("ppv derivative is undefined where ppv itself is 0/0");
    }
    return a * (1.0 - b) / (d * d);
}

double d2ppv_dphi2(const TestCharacteristics& test, double phi) {
    detail::require_probability(phi, "prevalence");
    const double a = test.sensitivity();
    const double b = test.specificity();
    const double d = denom_at(test, phi);
    if (d <= 0.0) {
        throw DegenerateTestError("ppv derivative is undefined where ppv itself is 0/0");
    }
    return -2.0 * a * (1.0 - b) * (a + b - 1.0) / (d * d * d);
}

double curvature(const TestCharacteristics& test, double phi) {
    const double d1 = dppv_dphi(test, phi);
    const double d2 = d2ppv_dphi2(test, phi);
    return std::abs(d2) / std::pow(1.0 + d1 * d1, 1.5);
}

std::optional<double> prevalence_threshold(const TestCharacteristics& test) {
    const double a = test.sensitivity();
    const double b = test.specificity();
    if (test.is_degenerate()) {
        throw DegenerateTestError(
            "prevalence threshold is undefined: the ppv curve itself is undefined");
    }
    if (classify(test).kind == Concavity::linear) return std::nullopt;
    const double sa = std::sqrt(a);
    const double sc = std::sqrt(1.0 - b);
    return sc / (sa + sc);
}

double prevalence_threshold_youden_form(const TestCharacteristics& test) {
    const double a = test.sensitivity();
    const double b = test.specificity();
    const double j = test.youden_j();
    if (std::abs(j) <= kLinearTolerance) {
        throw MathError("youden-form threshold divides by the youden index; "
                        "it blows up on a linear curve");
    }
    return (std::sqrt(a * (1.0 - b)) + b - 1.0) / j;
}

std::optional<double> numeric_threshold_oracle(const TestCharacteristics& test) {
    constexpr int kGridPoints = 1001;
    constexpr double kBracketWidth = 1e-9;
    constexpr double kFlatTolerance = 1e-12;

    if (test.sensitivity() == 0.0 || test.specificity() == 1.0) {
        // Curvature is identically zero (or the curve undefined); nothing to find.
        return std::nullopt;
    }

    const auto kappa = [&test](double phi) { return curvature(test, phi); };

    int best = 0;
    double best_value = -1.0;
    for (int i = 0; i < kGridPoints; ++i) {
        const double phi = static_cast<double>(i) / (kGridPoints - 1);
        const double value = kappa(phi);
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    if (best_value < kFlatTolerance) return std::nullopt;

    const double step = 1.0 / (kGridPoints - 1);
    double lo = std::max(0.0, (best - 1) * step);
    double hi = std::min(1.0, (best + 1) * step);

    // Golden-section search for the maximum of kappa on [lo, hi].
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = kappa(x1);
    double f2 = kappa(x2);
    while (hi - lo > kBracketWidth) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = kappa(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = kappa(x1);
        }
    }
    return 0.5 * (lo + hi);
}

std::optional<double> ppv_at_threshold(const TestCharacteristics& test) {
    const auto threshold = prevalence_threshold(test);
    if (!threshold) return std::nullopt;
    const double a = test.sensitivity();
    const double b = test.specificity();
    if (b >= 1.0) return 1.0;
    // ppv at the threshold collapses to sqrt(a) / (sqrt(a) + sqrt(1 - b)).
    const double sa = std::sqrt(a);
    const double sc = std::sqrt(1.0 - b);
    return sa / (sa + sc);
}

ThresholdSensitivities threshold_sensitivities(const TestCharacteristics& test) {
    constexpr double h = 1e-6;
    constexpr double kMargin = 1e-5;

    const double a = test.sensitivity();
    const double b = test.specificity();
    if (a < kMargin || a > 1.0 - kMargin || b < kMargin || b > 1.0 - kMargin) {
        throw MathError("threshold sensitivities need interior characteristics; "
                        "the stencil would cross a parameter boundary");
    }
    if (classify(test).kind == Concavity::linear) {
        throw MathError("threshold sensitivity is undefined on a linear curve");
    }

    const auto threshold_at = [](double a_probe, double b_probe) {
        const auto t = prevalence_threshold(TestCharacteristics(a_probe, b_probe));
        if (!t) {
            throw MathError("threshold sensitivity is undefined on a linear curve");
        }
        return *t;
    };

    ThresholdSensitivities s{};
    s.d_sensitivity = (threshold_at(a + h, b) - threshold_at(a - h, b)) / (2.0 * h);
    s.d_specificity = (threshold_at(a, b + h) - threshold_at(a, b - h)) / (2.0 * h);
    return s;
}

ThresholdReport threshold_report(const TestCharacteristics& test) {
    ThresholdReport report{};
    report.concavity = classify(test);
    report.threshold = prevalence_threshold(test);
    report.ppv_at_threshold = ppv_at_threshold(test);
    report.oracle_threshold = numeric_threshold_oracle(test);
    if (report.threshold && report.oracle_threshold) {
        report.oracle_residual = std::abs(*report.threshold - *report.oracle_threshold);
    }
    return report;
}

} // namespace screening
