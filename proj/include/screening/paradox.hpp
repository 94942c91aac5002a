#pragma once

#include <optional>
#include <vector>

#include "screening/core.hpp"

namespace screening::paradox {

// One screened population with a treatment program attached. Each round a
// fraction screening_coverage of the population is screened, the test finds
// diseased individuals at its sensitivity, and treatment_efficacy of those
// found are cured and leave the diseased pool.
struct ParadoxScenario {
    TestCharacteristics test;
    double initial_prevalence;
    double treatment_efficacy;
    double screening_coverage;
    int rounds;

    ParadoxScenario(TestCharacteristics test, double initial_prevalence,
                    double treatment_efficacy, double screening_coverage, int rounds);
};

struct TrajectoryPoint {
    int round;
    double prevalence;
    double ppv;
};

struct ParadoxTrajectory {
    std::vector<TrajectoryPoint> series;
    std::optional<double> threshold;
    // First round whose prevalence falls below the threshold; empty when the
    // threshold is undefined or never crossed.
    std::optional<int> crossing_round;
};

// Prevalence after one screen-and-treat round: geometric decay at rate
// (1 - sensitivity * treatment_efficacy * screening_coverage).
double step(const ParadoxScenario& scenario, double prevalence);

// Full trajectory over scenario.rounds rounds, rounds + 1 points including
// the starting state, each annotated with the ppv the test delivers there.
ParadoxTrajectory run(const ParadoxScenario& scenario);

} // namespace screening::paradox
