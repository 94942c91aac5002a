#pragma once

#include "screening/core.hpp"

namespace screening {

struct AucReport {
    double auc_closed;
    double auc_numeric;
    double residual;
    double epsilon;
};

// Antiderivative of the ppv curve, defined up to a constant. Throws on
// linear-class tests (the formula divides by the squared youden index) and
// where the log argument vanishes.
double antiderivative(const TestCharacteristics& test, double phi);

// Adaptive Simpson quadrature of the ppv curve over [lo, hi], absolute
// tolerance 1e-10, bisection depth capped at 60.
double auc_quadrature(const TestCharacteristics& test, double lo, double hi);

// Area under the ppv curve over [0, 1]: closed form and quadrature side by
// side, with their absolute difference. Tends to 1 as the test approaches
// perfection.
AucReport auc(const TestCharacteristics& test);

} // namespace screening
