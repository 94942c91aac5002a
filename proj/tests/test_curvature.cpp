#include <cmath>

#include "doctest.h"

#include "screening/curvature.hpp"
#include "support/finite_difference.hpp"
#include "support/generators.hpp"

using doctest::Approx;
using namespace screening;

namespace {
const TestCharacteristics covid(0.95, 0.99);
const TestCharacteristics identity_line(0.5, 0.5);
const TestCharacteristics weak(0.2, 0.4);
} // namespace

TEST_SUITE("classification") {
    TEST_CASE("one instance per class") {
        CHECK(classify(covid).kind == Concavity::concave);
        CHECK(classify(covid).epsilon == Approx(1.94));
        CHECK(classify(identity_line).kind == Concavity::linear);
        CHECK(classify(identity_line).epsilon == Approx(1.0));
        CHECK(classify(TestCharacteristics(0.2, 0.2)).kind == Concavity::convex);
        CHECK(classify(TestCharacteristics(0.2, 0.2)).epsilon == Approx(0.4));
    }

    TEST_CASE("tolerance band around the linear class") {
        CHECK(classify(TestCharacteristics(0.5, 0.5 + 1e-13)).kind == Concavity::linear);
        CHECK(classify(TestCharacteristics(0.5, 0.5 + 1e-11)).kind == Concavity::concave);
        CHECK(classify(TestCharacteristics(0.5, 0.5 - 1e-11)).kind == Concavity::convex);
    }
}

TEST_SUITE("derivatives") {
    TEST_CASE("endpoint slopes collapse to likelihood-ratio expressions") {
        CHECK(dppv_dphi(covid, 0.0) == Approx(95.0).epsilon(1e-12));
        CHECK(dppv_dphi(covid, 1.0) == Approx(0.010526315789).epsilon(1e-9));
        for (int i = 0; i <= 10; ++i) {
            CHECK(dppv_dphi(identity_line, i / 10.0) == Approx(1.0).epsilon(1e-14));
        }
    }

    TEST_CASE("first derivative matches finite differences") {
        testgen::Rng rng(21);
        for (int i = 0; i < 200; ++i) {
            const auto t = rng.nonlinear_test();
            const double phi = rng.uniform(0.01, 0.99);
            const double fd = testgen::central_difference(
                [&t](double x) { return ppv(t, x); }, phi, 1e-6);
            CHECK(dppv_dphi(t, phi) == Approx(fd).epsilon(1e-4));
        }
    }

    TEST_CASE("second derivative matches finite differences of the first") {
        testgen::Rng rng(22);
        for (int i = 0; i < 200; ++i) {
            const auto t = rng.nonlinear_test();
            const double phi = rng.uniform(0.01, 0.99);
            const double fd = testgen::central_difference(
                [&t](double x) { return dppv_dphi(t, x); }, phi, 1e-6);
            CHECK(d2ppv_dphi2(t, phi) == Approx(fd).epsilon(1e-4));
        }
    }

    TEST_CASE("second-derivative sign tracks the screening coefficient") {
        CHECK(d2ppv_dphi2(identity_line, 0.5) == 0.0);
        CHECK(d2ppv_dphi2(covid, 0.093) < 0.0);
        CHECK(d2ppv_dphi2(weak, 0.5) > 0.0);
    }

    TEST_CASE("no inflection anywhere for fixed non-linear characteristics") {
        testgen::Rng rng(23);
        for (int i = 0; i < 10; ++i) {
            const auto t = rng.nonlinear_test();
            const double expected = t.epsilon() > 1.0 ? -1.0 : 1.0;
            for (int k = 1; k < 10000; ++k) {
                const double d2 = d2ppv_dphi2(t, k / 10000.0);
                REQUIRE(d2 * expected > 0.0);
            }
        }
    }

    TEST_CASE("derivatives share the ppv error cases") {
        CHECK_THROWS_AS(dppv_dphi(TestCharacteristics(0.5, 1.0), 0.0), DegenerateTestError);
        CHECK_THROWS_AS(d2ppv_dphi2(TestCharacteristics(0.0, 0.5), 1.0), DegenerateTestError);
        CHECK_THROWS_AS(curvature(covid, -0.5), ValidationError);
    }
}

TEST_SUITE("curvature") {
    TEST_CASE("identity line is flat") {
        CHECK(curvature(identity_line, 0.7) == 0.0);
    }

    TEST_CASE("closed-form threshold is the curvature maximum on a dense grid") {
        testgen::Rng rng(24);
        for (int i = 0; i < 5; ++i) {
            const auto t = rng.nonlinear_test();
            const double phi_e = prevalence_threshold(t).value();
            const double kappa_e = curvature(t, phi_e);
            for (int k = 1; k < 10000; ++k) {
                REQUIRE(kappa_e + 1e-9 * (1.0 + kappa_e) >= curvature(t, k / 10000.0));
            }
        }
    }
}

TEST_SUITE("prevalence threshold") {
    TEST_CASE("covid worked value") {
        CHECK(prevalence_threshold(covid).value() ==
              Approx(0.0930510036681805).epsilon(1e-12));
    }

    TEST_CASE("edge characteristics") {
        CHECK(prevalence_threshold(TestCharacteristics(1.0, 1.0)).value() == 0.0);
        CHECK(prevalence_threshold(TestCharacteristics(0.9, 1.0)).value() == 0.0);
        CHECK(prevalence_threshold(TestCharacteristics(0.0, 0.4)).value() == 1.0);
        CHECK(!prevalence_threshold(identity_line).has_value());
        CHECK_THROWS_AS(prevalence_threshold(TestCharacteristics(0.0, 1.0)),
                        DegenerateTestError);
    }

    TEST_CASE("interior threshold stays interior") {
        testgen::Rng rng(25);
        for (int i = 0; i < 200; ++i) {
            const auto t = rng.interior_nonlinear_test();
            const double phi_e = prevalence_threshold(t).value();
            CHECK(phi_e > 0.0);
            CHECK(phi_e < 1.0);
        }
    }

    TEST_CASE("both printed forms agree away from the linear band") {
        testgen::Rng rng(26);
        for (int i = 0; i < 200; ++i) {
            const auto t = rng.nonlinear_test();
            CHECK(std::abs(prevalence_threshold(t).value() -
                           prevalence_threshold_youden_form(t)) < 1e-10);
        }
    }

    TEST_CASE("form agreement survives down to the linear-band edge") {
        for (const double delta : {1e-3, 1e-4, 1e-5, 1e-6}) {
            const TestCharacteristics near_linear(0.45, 0.55 + delta);
            CHECK(std::abs(prevalence_threshold(near_linear).value() -
                           prevalence_threshold_youden_form(near_linear)) < 1e-10);
        }
        CHECK_THROWS_AS(prevalence_threshold_youden_form(identity_line), MathError);
    }

    TEST_CASE("threshold decreases as either characteristic improves") {
        double last = 1.0;
        for (int k = 3; k <= 9; ++k) {
            const double phi_e = prevalence_threshold(TestCharacteristics(k / 10.0, 0.8))
                                     .value();
            CHECK(phi_e < last);
            last = phi_e;
        }
        last = 1.0;
        for (int k = 1; k <= 9; ++k) {
            if (k == 4) continue;
            const double phi_e = prevalence_threshold(TestCharacteristics(0.6, k / 10.0))
                                     .value();
            CHECK(phi_e < last);
            last = phi_e;
        }
    }
}

TEST_SUITE("numeric oracle") {
    TEST_CASE("matches the closed form") {
        const double oracle = numeric_threshold_oracle(covid).value();
        CHECK(std::abs(oracle - 0.0930510036681805) < 1e-6);
        CHECK(std::abs(numeric_threshold_oracle(TestCharacteristics(0.65, 0.75)).value() -
                       0.3827822185) < 1e-6);
    }

    TEST_CASE("undefined when curvature vanishes") {
        CHECK(!numeric_threshold_oracle(identity_line).has_value());
        CHECK(!numeric_threshold_oracle(TestCharacteristics(0.0, 0.4)).has_value());
        CHECK(!numeric_threshold_oracle(TestCharacteristics(0.9, 1.0)).has_value());
    }

    TEST_CASE("agreement across random instances") {
        testgen::Rng rng(27);
        for (int i = 0; i < 200; ++i) {
            const auto t = rng.nonlinear_test();
            const double closed = prevalence_threshold(t).value();
            const double oracle = numeric_threshold_oracle(t).value();
            REQUIRE(std::abs(closed - oracle) < 1e-6);
        }
    }
}

TEST_SUITE("ppv at threshold") {
    TEST_CASE("spot values") {
        CHECK(ppv_at_threshold(covid).value() == Approx(0.906948996332).epsilon(1e-10));
        CHECK(ppv_at_threshold(TestCharacteristics(0.85, 0.90)).value() ==
              Approx(0.744603207).epsilon(1e-9));
        CHECK(!ppv_at_threshold(identity_line).has_value());
        CHECK(ppv_at_threshold(TestCharacteristics(0.9, 1.0)).value() == 1.0);
    }

    TEST_CASE("consistent with the curve and with the slope form") {
        testgen::Rng rng(28);
        for (int i = 0; i < 200; ++i) {
            const auto t = rng.nonlinear_test();
            if (t.specificity() >= 1.0) continue;
            const double phi_e = prevalence_threshold(t).value();
            const double rho_e = ppv_at_threshold(t).value();
            CHECK(rho_e == Approx(ppv(t, phi_e)).epsilon(1e-12));
            CHECK(rho_e ==
                  Approx(phi_e * std::sqrt(t.sensitivity() / (1.0 - t.specificity())))
                      .epsilon(1e-12));
        }
    }
}

TEST_SUITE("threshold sensitivities") {
    TEST_CASE("specificity dominates exactly when the curve is concave") {
        const auto s = threshold_sensitivities(covid);
        CHECK(s.d_sensitivity < 0.0);
        CHECK(s.d_specificity < 0.0);
        CHECK(std::abs(s.d_specificity) / std::abs(s.d_sensitivity) ==
              Approx(95.0).epsilon(0.01));

        // Exact balance (|d_b| == |d_a|) sits on the linear band itself, where
        // the threshold does not exist; just off the band the ratio is ~1.
        const auto balanced = threshold_sensitivities(TestCharacteristics(0.6, 0.401));
        CHECK(std::abs(balanced.d_specificity) / std::abs(balanced.d_sensitivity) ==
              Approx(0.6 / 0.599).epsilon(0.001));

        const auto reversed = threshold_sensitivities(weak);
        CHECK(std::abs(reversed.d_specificity) / std::abs(reversed.d_sensitivity) ==
              Approx(1.0 / 3.0).epsilon(0.01));
    }

    TEST_CASE("dominance flips with the screening coefficient") {
        testgen::Rng rng(29);
        for (int i = 0; i < 50; ++i) {
            const auto t = rng.interior_nonlinear_test();
            const auto s = threshold_sensitivities(t);
            const double ratio = std::abs(s.d_specificity) / std::abs(s.d_sensitivity);
            CHECK(ratio == Approx(t.sensitivity() / (1.0 - t.specificity())).epsilon(0.01));
            CHECK((ratio > 1.0) == (t.epsilon() > 1.0));
        }
    }

    TEST_CASE("boundary and linear guards") {
        CHECK_THROWS_AS(threshold_sensitivities(TestCharacteristics(0.5, 1.0 - 1e-7)),
                        MathError);
        CHECK_THROWS_AS(threshold_sensitivities(identity_line), MathError);
    }
}

TEST_SUITE("threshold report") {
    TEST_CASE("bundles the closed form with its oracle") {
        const auto report = threshold_report(covid);
        CHECK(report.concavity.kind == Concavity::concave);
        CHECK(report.threshold.value() == Approx(0.0930510036681805).epsilon(1e-12));
        CHECK(report.ppv_at_threshold.value() == Approx(0.906948996332).epsilon(1e-10));
        CHECK(report.oracle_residual.value() < 1e-6);

        const auto linear = threshold_report(identity_line);
        CHECK(linear.concavity.kind == Concavity::linear);
        CHECK(!linear.threshold.has_value());
        CHECK(!linear.oracle_threshold.has_value());
        CHECK(!linear.oracle_residual.has_value());
    }
}
