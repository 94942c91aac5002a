#pragma once

#include <string>

#include "screening/curve.hpp"

namespace screening {

// Standalone SVG of the sampled curve: one path for the curve, a dashed
// vertical marker at the threshold prevalence when there is one, axes with
// ticks, and a legend carrying the name and epsilon. Byte-deterministic.
std::string render_svg(const CurveSamples& samples);

} // namespace screening
