#include "screening/curve.hpp"

#include <string>
#include <utility>

#include "screening/curvature.hpp"

namespace screening {

CurveSamples sample_curve(const TestCharacteristics& test, int n, std::string name) {
    if (n < 2) {
        throw ValidationError("sample count must be at least 2, got " + std::to_string(n));
    }

    CurveSamples samples{};
    samples.name = std::move(name);
    samples.sensitivity = test.sensitivity();
    samples.specificity = test.specificity();
    samples.epsilon = test.epsilon();
    samples.threshold = prevalence_threshold(test);
    samples.ppv_at_threshold = ppv_at_threshold(test);

    samples.rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Pin the last row to exactly 1 so rounding never pushes it past the edge.
        const double phi = i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1);
        samples.rows.push_back(
            {phi, ppv(test, phi), dppv_dphi(test, phi), curvature(test, phi)});
    }
    return samples;
}

} // namespace screening
