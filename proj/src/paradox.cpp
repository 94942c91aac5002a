#include "screening/paradox.hpp"

#include <string>

#include "screening/curvature.hpp"

namespace screening::paradox {

ParadoxScenario::ParadoxScenario(TestCharacteristics test, double initial_prevalence,
                                 double treatment_efficacy, double screening_coverage,
                                 int rounds)
    : test(test),
      initial_prevalence(initial_prevalence),
      treatment_efficacy(treatment_efficacy),
      screening_coverage(screening_coverage),
      rounds(rounds) {
    if (!(initial_prevalence > 0.0 && initial_prevalence < 1.0)) {
        throw ValidationError("initial_prevalence must lie in (0, 1), got " +
                              std::to_string(initial_prevalence));
    }
    detail::require_probability(treatment_efficacy, "treatment_efficacy");
    detail::require_probability(screening_coverage, "screening_coverage");
    if (rounds < 1) {
        throw ValidationError("rounds must be at least 1, got " + std::to_string(rounds));
    }
}

double step(const ParadoxScenario& scenario, double prevalence) {
    detail::require_probability(prevalence, "prevalence");
    const double removal = scenario.test.sensitivity() * scenario.treatment_efficacy *
                           scenario.screening_coverage;
    return prevalence * (1.0 - removal);
}

ParadoxTrajectory run(const ParadoxScenario& scenario) {
    ParadoxTrajectory trajectory{};
    trajectory.threshold = prevalence_threshold(scenario.test);

    double phi = scenario.initial_prevalence;
    trajectory.series.reserve(static_cast<std::size_t>(scenario.rounds) + 1);
    for (int t = 0; t <= scenario.rounds; ++t) {
        if (t > 0) phi = step(scenario, phi);
        trajectory.series.push_back({t, phi, ppv(scenario.test, phi)});
        if (!trajectory.crossing_round && trajectory.threshold && phi < *trajectory.threshold) {
            trajectory.crossing_round = t;
        }
    }
    return trajectory;
}

} // namespace screening::paradox
