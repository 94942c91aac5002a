#include <cmath>

#include "doctest.h"

#include "screening/curvature.hpp"
#include "screening/integrals.hpp"
#include "support/finite_difference.hpp"
#include "support/generators.hpp"

using doctest::Approx;
using namespace screening;

namespace {
const TestCharacteristics covid(0.95, 0.99);
const TestCharacteristics identity_line(0.5, 0.5);
} // namespace

TEST_SUITE("antiderivative") {
    TEST_CASE("differentiates back to the curve") {
        testgen::Rng rng(31);
        for (int i = 0; i < 200; ++i) {
            const auto t = rng.nonlinear_test();
            const double phi = rng.uniform(0.01, 0.99);
            const double fd = testgen::central_difference(
                [&t](double x) { return antiderivative(t, x); }, phi, 1e-6);
            CHECK(fd == Approx(ppv(t, phi)).epsilon(1e-5));
        }
    }

    TEST_CASE("linear class and log singularities are typed errors") {
        CHECK_THROWS_AS(antiderivative(identity_line, 0.5), MathError);
        CHECK_THROWS_AS(antiderivative(TestCharacteristics(0.0, 0.4), 1.0),
                        LogSingularityError);
        CHECK_THROWS_AS(antiderivative(TestCharacteristics(0.5, 1.0), 0.0),
                        LogSingularityError);
    }
}

TEST_SUITE("auc") {
    TEST_CASE("covid value and residual") {
        const auto report = auc(covid);
        CHECK(report.auc_closed == Approx(0.961677421378).epsilon(1e-9));
        CHECK(report.auc_numeric == Approx(0.961677421378).epsilon(1e-9));
        CHECK(report.residual < 1e-9);
        CHECK(report.epsilon == Approx(1.94));
    }

    TEST_CASE("identity line integrates to one half exactly") {
        const auto report = auc(identity_line);
        CHECK(report.auc_closed == 0.5);
        CHECK(std::abs(report.auc_numeric - 0.5) < 1e-12);
        CHECK(report.residual < 1e-12);
    }

    TEST_CASE("frozen spot values") {
        CHECK(auc(TestCharacteristics(0.85, 0.9)).auc_closed ==
              Approx(0.809945557516).epsilon(1e-10));
        CHECK(auc(TestCharacteristics(0.2, 0.4)).auc_closed ==
              Approx(0.323959216501).epsilon(1e-10));
    }

    TEST_CASE("degenerate and flat extremes") {
        const auto perfect = auc(TestCharacteristics(1.0, 1.0));
        CHECK(perfect.auc_closed == 1.0);
        CHECK(perfect.auc_numeric == Approx(1.0).epsilon(1e-12));

        const auto blind = auc(TestCharacteristics(0.0, 0.4));
        CHECK(blind.auc_closed == 0.0);
        CHECK(blind.auc_numeric == 0.0);
        CHECK(blind.residual == 0.0);

        CHECK_THROWS_AS(auc(TestCharacteristics(0.0, 1.0)), DegenerateTestError);
    }

    TEST_CASE("closed form tracks quadrature everywhere sampled") {
        testgen::Rng rng(32);
        for (int i = 0; i < 200; ++i) {
            const auto report = auc(rng.nonlinear_test());
            REQUIRE(report.residual < 1e-9);
            CHECK(report.auc_closed >= 0.0);
            CHECK(report.auc_closed <= 1.0);
        }
    }

    TEST_CASE("closed form is continuous across the linear band") {
        for (const double delta : {1e-3, 1e-6, 1e-9}) {
            const auto above = auc(TestCharacteristics(0.5, 0.5 + delta));
            const auto below = auc(TestCharacteristics(0.5, 0.5 - delta));
            CHECK(above.auc_closed == Approx(0.5).epsilon(delta));
            CHECK(below.auc_closed == Approx(0.5).epsilon(delta));
            CHECK(above.residual < 1e-9);
            CHECK(below.residual < 1e-9);
        }
    }

    TEST_CASE("approaches one as the test approaches perfection") {
        double last = 0.0;
        double final_value = 0.0;
        for (int k = 1; k <= 6; ++k) {
            const double delta = std::pow(10.0, -k);
            const auto report = auc(TestCharacteristics(1.0 - delta, 1.0 - delta));
            CHECK(report.auc_closed > last);
            CHECK(report.residual < 1e-9);
            last = report.auc_closed;
            final_value = report.auc_closed;
        }
        CHECK(final_value > 0.9999);
    }

    TEST_CASE("increases with the screening coefficient along the symmetric family") {
        double last = -1.0;
        for (int k = 1; k <= 99; ++k) {
            const double half = k / 100.0;
            const auto report = auc(TestCharacteristics(half, half));
            REQUIRE(report.auc_closed > last);
            last = report.auc_closed;
        }
    }
}

TEST_SUITE("quadrature") {
    TEST_CASE("partial intervals add up") {
        const double whole = auc_quadrature(covid, 0.0, 1.0);
        const double split =
            auc_quadrature(covid, 0.0, 0.3) + auc_quadrature(covid, 0.3, 1.0);
        CHECK(whole == Approx(split).epsilon(1e-9));
        CHECK(auc_quadrature(covid, 0.4, 0.4) == 0.0);
    }

    TEST_CASE("limit validation") {
        CHECK_THROWS_AS(auc_quadrature(covid, 0.8, 0.2), ValidationError);
        CHECK_THROWS_AS(auc_quadrature(covid, -0.1, 0.5), ValidationError);
        CHECK_THROWS_AS(auc_quadrature(TestCharacteristics(0.0, 1.0), 0.0, 1.0),
                        DegenerateTestError);
    }
}
