#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gwf/errors.hpp"
#include "gwf/wendland.hpp"

using namespace gwf;

TEST_CASE("parameter validation and derived quantities") {
    WendlandParams p(4.0, 1.0, 1.0, 3);
    CHECK(p.lambda == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(p.pd_euclidean());
    CHECK(p.sphere_usable());
    CHECK(!WendlandParams(4.0, 1.0, 0.4, 3).sphere_usable());
    CHECK(!WendlandParams(2.0, 1.0, 1.0, 3).pd_euclidean());  // mu < lambda
    CHECK_THROWS_AS(WendlandParams(4.0, 0.0, 1.0, 3), DomainError);
    CHECK_THROWS_AS(WendlandParams(4.0, 1.0, -1.0, 3), DomainError);
    CHECK_THROWS_AS(WendlandParams(4.0, 1.0, 1.0, 0), DomainError);
}

TEST_CASE("compact support and truncated power") {
    WendlandParams p(4.0, 1.0, 2.0, 3);  // support radius 1/2
    CHECK(wendland_eval(0.5, p).value == 0.0);
    CHECK(wendland_eval(0.7, p).value == 0.0);
    CHECK(wendland_eval(0.49, p).value > 0.0);
    CHECK(truncated_power(0.5, p) == 0.0);
    CHECK(truncated_power(0.1, p) == doctest::Approx(std::pow(0.8, 4.0)).epsilon(1e-15));
    CHECK_THROWS_AS(wendland_eval(-0.1, p), DomainError);
}

TEST_CASE("epsilon acts by pure rescaling of the argument") {
    WendlandParams unit(3.5, 1.5, 1.0, 3);
    WendlandParams scaled(3.5, 1.5, 2.0, 3);
    for (double r : {0.05, 0.2, 0.4}) {
        double a = wendland_eval(2.0 * r, unit).value;
        double b = wendland_eval(r, scaled).value;
        CHECK(std::fabs(a - b) <= 1e-13 * std::fabs(a));
    }
}

TEST_CASE("value at zero matches the Beta-integral closed form") {
    for (double mu : {2.0, 4.5}) {
        for (double alpha : {0.5, 1.0, 2.5}) {
            WendlandParams p(mu, alpha, 1.0, 3);
            double qz = wendland_eval(0.0, p).value;
            CHECK(std::fabs(qz - wendland_at_zero(p)) < 1e-12 * wendland_at_zero(p));
        }
    }
}

TEST_CASE("known polynomial case mu=2, alpha=1") {
    // phi_{2,1}(r) on [0,1]: integral of (1-t)^2 t (t^2-r^2)^0 = ... gives
    // (1 - r)^3 (1 + 3r) / 12 ... verified against direct integration of
    // int_r^1 (1-t)^2 t dt = 1/12 - r^2/2 + 2r^3/3 - r^4/4
    WendlandParams p(2.0, 1.0, 1.0, 1);
    for (double r : {0.0, 0.25, 0.6, 0.9}) {
        double exact = 1.0 / 12.0 - r * r / 2.0 + 2.0 * r * r * r / 3.0 -
                       r * r * r * r / 4.0;
        CHECK(std::fabs(wendland_eval(r, p).value - exact) < 1e-13);
    }
}

TEST_CASE("exact rational polynomial matches quadrature") {
    for (int mu : {2, 4, 6}) {
        for (int alpha : {1, 2}) {
            WendlandParams p(mu, alpha, 1.0, 3);
            PiecewisePolynomial poly = polynomial_closed_form(p);
            CHECK(!poly.rational_coefficients.empty());
            for (double r : {0.0, 0.17, 0.5, 0.83, 0.99}) {
                double a = poly(p.epsilon * r);
                EvalResult b = wendland_eval(r, p);
                // near the support edge the value decays fast and the
                // quadrature result bottoms out at its absolute floor
                CHECK(std::fabs(a - b.value) <=
                      1e-12 * std::fabs(a) + 3.0 * b.abs_error_estimate + 1e-16);
            }
            CHECK(poly(1.0 + 1e-12) == 0.0);
        }
    }
    // non-integer parameters have no polynomial form
    CHECK_THROWS_AS(polynomial_closed_form(WendlandParams(2.5, 1.0, 1.0, 3)), DomainError);
}
