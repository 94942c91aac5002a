#pragma once

#include <optional>

#include "screening/core.hpp"

namespace screening {

// Shape of the ppv-vs-prevalence curve, decided by the sign of epsilon - 1.
enum class Concavity { concave, linear, convex };

struct ConcavityClass {
    Concavity kind;
    double epsilon;
};

// |epsilon - 1| at or below this is treated as exactly linear.
inline constexpr double kLinearTolerance = 1e-12;

const char* to_string(Concavity kind);

ConcavityClass classify(const TestCharacteristics& test);

double dppv_dphi(const TestCharacteristics& test, double phi);
double d2ppv_dphi2(const TestCharacteristics& test, double phi);

// Unsigned curvature |f''| / (1 + f'^2)^(3/2) of the ppv curve at phi.
double curvature(const TestCharacteristics& test, double phi);

// Prevalence of maximal curvature, in closed form. Empty when the curve is a
// straight line (no curvature anywhere); throws DegenerateTestError when the
// curve itself is undefined (sensitivity 0 with perfect specificity).
std::optional<double> prevalence_threshold(const TestCharacteristics& test);

// Same point written over the Youden index; numerically touchier near the
// linear regime, kept for cross-checking. Requires |epsilon - 1| above
// kLinearTolerance.
double prevalence_threshold_youden_form(const TestCharacteristics& test);

// Brute-force argmax of curvature over [0, 1]: coarse 1001-point grid, then
// golden-section refinement to a bracket of width 1e-9. Empty when curvature
// vanishes identically.
std::optional<double> numeric_threshold_oracle(const TestCharacteristics& test);

// ppv evaluated at the threshold prevalence. Empty for linear curves; 1.0 at
// perfect specificity, where the threshold sits at phi = 0 and every positive
// call is a true positive.
std::optional<double> ppv_at_threshold(const TestCharacteristics& test);

struct ThresholdSensitivities {
    double d_sensitivity;
    double d_specificity;
};

// Central finite differences (step 1e-6) of the threshold with respect to
// each test characteristic. Both characteristics must sit at least 1e-5 away
// from 0 and 1 so the stencil stays on valid inputs; throws MathError
// otherwise, and on linear curves where the threshold does not exist.
ThresholdSensitivities threshold_sensitivities(const TestCharacteristics& test);

struct ThresholdReport {
    ConcavityClass concavity;
    std::optional<double> threshold;
    std::optional<double> ppv_at_threshold;
    std::optional<double> oracle_threshold;
    std::optional<double> oracle_residual;
};

ThresholdReport threshold_report(const TestCharacteristics& test);

} // namespace screening
