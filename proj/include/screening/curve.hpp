#pragma once

#include <optional>
#include <string>
#include <vector>

#include "screening/core.hpp"

namespace screening {

struct CurveRow {
    double phi;
    double ppv;
    double slope;
    double curvature;
};

// Uniformly sampled screening curve plus the scalars a renderer needs.
struct CurveSamples {
    std::string name;
    double sensitivity;
    double specificity;
    double epsilon;
    std::optional<double> threshold;
    std::optional<double> ppv_at_threshold;
    std::vector<CurveRow> rows;
};

// n rows at uniform prevalence spacing over [0, 1] inclusive, n >= 2.
CurveSamples sample_curve(const TestCharacteristics& test, int n, std::string name = {});

} // namespace screening
