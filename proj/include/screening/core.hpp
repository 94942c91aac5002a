#pragma once

#include <cstdint>
#include <optional>

#include "screening/errors.hpp"

namespace screening {

/// Sensitivity/specificity pair of a screening test. Validated once at
/// construction; every curve function takes this pair by value.
class TestCharacteristics {
public:
    TestCharacteristics(double sensitivity, double specificity);

    double sensitivity() const noexcept { return sensitivity_; }
    double specificity() const noexcept { return specificity_; }

    /// Screening coefficient: sensitivity + specificity, in [0, 2].
    double epsilon() const noexcept { return sensitivity_ + specificity_; }

    /// Youden's J statistic: epsilon - 1.
    double youden_j() const noexcept { return sensitivity_ + specificity_ - 1.0; }

    /// Positive likelihood ratio, sensitivity / (1 - specificity).
    /// Throws MathError at perfect specificity.
    double lr_plus() const;

    /// True when the test carries no information at any prevalence
    /// (zero sensitivity and perfect specificity).
    bool is_degenerate() const noexcept { return sensitivity_ == 0.0 && specificity_ == 1.0; }

private:
    double sensitivity_;
    double specificity_;
};

/// Raw 2x2 screening counts. Both the condition-present column
/// (tp + fn) and the condition-absent column (fp + tn) must be
/// non-empty so that sensitivity and specificity exist.
struct ConfusionMatrix {
    std::int64_t true_positives;
    std::int64_t false_positives;
    std::int64_t false_negatives;
    std::int64_t true_negatives;

    ConfusionMatrix(std::int64_t tp, std::int64_t fp, std::int64_t fn, std::int64_t tn);

    std::int64_t total() const noexcept {
        return true_positives + false_positives + false_negatives + true_negatives;
    }
};

/// The five ratios of a counted 2x2 table. Prevalence, sensitivity and
/// specificity always exist under the ConfusionMatrix invariants; the
/// predictive values are absent when their test-result row is empty.
struct CountMetrics {
    double prevalence;
    double sensitivity;
    double specificity;
    std::optional<double> ppv;
    std::optional<double> npv;

    /// Value of ppv, or UndefinedRatioError naming the metric.
    double require_ppv() const;
    /// Value of npv, or UndefinedRatioError naming the metric.
    double require_npv() const;
};

CountMetrics metrics_from_counts(const ConfusionMatrix& counts);

/// Positive predictive value at the given prevalence:
///   ppv = a*phi / (a*phi + (1-b)*(1-phi))
double ppv(const TestCharacteristics& test, double prevalence);

/// Negative predictive value at the given prevalence:
///   npv = b*(1-phi) / (b*(1-phi) + (1-a)*phi)
double npv(const TestCharacteristics& test, double prevalence);

/// Prevalence at which the test attains the target positive predictive
/// value; inverse of ppv in its second argument:
///   phi = (1-b) / (a/rho - a - b + 1)
double prevalence_for_ppv(const TestCharacteristics& test, double target_ppv);

namespace detail {
/// Throws ValidationError unless value is a probability in [0, 1].
void require_probability(double value, const char* label);
} // namespace detail

} // namespace screening
