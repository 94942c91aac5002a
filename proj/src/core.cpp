#include "screening/core.hpp"

#include <string>

namespace screening {

namespace detail {

void require_probability(double value, const char* label) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ValidationError(std::string(label) + " must lie in [0, 1], got " +
                              std::to_string(value));
    }
}

} // namespace detail

TestCharacteristics::TestCharacteristics(double sensitivity, double specificity)
    : sensitivity_(sensitivity), specificity_(specificity) {
    detail::require_probability(sensitivity, "sensitivity");
    detail::require_probability(specificity, "specificity");
}

double TestCharacteristics::lr_plus() const {
    if (specificity_ >= 1.0) {
        throw MathError("positive likelihood ratio is undefined at perfect specificity");
    }
    return sensitivity_ / (1.0 - specificity_);
}

ConfusionMatrix::ConfusionMatrix(std::int64_t tp, std::int64_t fp, std::int64_t fn,
                                 std::int64_t tn)
    : true_positives(tp), false_positives(fp), false_negatives(fn), true_negatives(tn) {
    if (tp < 0 || fp < 0 || fn < 0 || tn < 0) {
        throw ValidationError("confusion-matrix counts must be non-negative");
    }
    if (tp + fn < 1) {
        throw ValidationError(
            "condition-present column is empty (tp + fn = 0): sensitivity is undefined");
    }
    if (fp + tn < 1) {
        throw ValidationError(
            "condition-absent column is empty (fp + tn = 0): specificity is undefined");
    }
}

double CountMetrics::require_ppv() const {
    if (!ppv) throw UndefinedRatioError("positive predictive value");
    return *ppv;
}

double CountMetrics::require_npv() const {
    if (!npv) throw UndefinedRatioError("negative predictive value");
    return *npv;
}

CountMetrics metrics_from_counts(const ConfusionMatrix& counts) {
    const auto tp = static_cast<double>(counts.true_positives);
    const auto fp = static_cast<double>(counts.false_positives);
    const auto fn = static_cast<double>(counts.false_negatives);
    const auto tn = static_cast<double>(counts.true_negatives);

    CountMetrics m{};
    m.prevalence = (tp + fn) / static_cast<double>(counts.total());
    m.sensitivity = tp / (tp + fn);
    m.specificity = tn / (tn + fp);
    if (counts.true_positives + counts.false_positives > 0) m.ppv = tp / (tp + fp);
    if (counts.false_negatives + counts.true_negatives > 0) m.npv = tn / (fn + tn);
    return m;
}

double ppv(const TestCharacteristics& test, double prevalence) {
    detail::require_probability(prevalence, "prevalence");
    const double a = test.sensitivity();
    const double b = test.specificity();
    const double denom = a * prevalence + (1.0 - b) * (1.0 - prevalence);
    if (denom <= 0.0) {
        throw DegenerateTestError("ppv is 0/0 at this prevalence: the test detects nothing here");
    }
    return a * prevalence / denom;
}

double npv(const TestCharacteristics& test, double prevalence) {
    detail::require_probability(prevalence, "prevalence");
    const double a = test.sensitivity();
    const double b = test.specificity();
    const double denom = b * (1.0 - prevalence) + (1.0 - a) * prevalence;
    if (denom <= 0.0) {
        throw DegenerateTestError("npv is 0/0 at this prevalence: the test detects nothing here");
    }
    return b * (1.0 - prevalence) / denom;
}

double prevalence_for_ppv(const TestCharacteristics& test, double target_ppv) {
    if (!(target_ppv > 0.0 && target_ppv <= 1.0)) {
        throw ValidationError("target ppv must lie in (0, 1], got " + std::to_string(target_ppv));
    }
    const double a = test.sensitivity();
    const double b = test.specificity();
    if (a == 0.0) {
        throw MathError("prevalence_for_ppv requires positive sensitivity");
    }
    const double denom = a / target_ppv - a - b + 1.0;
    if (denom == 0.0) {
        throw MathError("prevalence_for_ppv denominator vanished: the target ppv does not "
                        "pin down a prevalence for this test");
    }
    const double phi = (1.0 - b) / denom;
    if (!(phi >= 0.0 && phi <= 1.0)) {
        throw UnattainableError("no prevalence in [0, 1] attains the target ppv for this test");
    }
    return phi;
}

} // namespace screening
