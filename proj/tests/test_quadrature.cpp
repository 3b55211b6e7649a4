#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gwf/errors.hpp"
#include "gwf/quadrature.hpp"

using namespace gwf;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("polynomial and additivity") {
    auto sq = [](double x) { return x * x; };
    EvalResult r = integrate(sq, 0.0, 1.0);
    CHECK(std::fabs(r.value - 1.0 / 3.0) < 1e-14);
    double whole = integrate(sq, 0.0, 2.0).value;
    double split = integrate(sq, 0.0, 1.0).value + integrate(sq, 1.0, 2.0).value;
    CHECK(std::fabs(whole - split) < 1e-13);
}

TEST_CASE("oscillatory integrand on a finite interval") {
    auto f = [](double x) { return std::sin(40.0 * x); };
    double exact = (1.0 - std::cos(40.0)) / 40.0;
    CHECK(std::fabs(integrate(f, 0.0, 1.0).value - exact) < 1e-12);
}

TEST_CASE("integrable endpoint singularity") {
    auto f = [](double x) { return 1.0 / std::sqrt(x); };
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    cfg.abs_tol = 1e-12;
    cfg.max_subdivisions = 100000;
    EvalResult r = integrate(f, 0.0, 1.0, cfg);
    CHECK(std::fabs(r.value - 2.0) < 1e-8);
}

TEST_CASE("NaN integrand and subdivision limit throw") {
    auto bad = [](double) { return std::nan(""); };
    CHECK_THROWS_AS(integrate(bad, 0.0, 1.0), QuadratureError);
    auto needle = [](double x) { return 1.0 / std::sqrt(std::fabs(x - 0.37) + 1e-300); };
    QuadratureConfig tight;
    tight.rel_tol = 1e-14;
    tight.abs_tol = 1e-300;
    tight.max_subdivisions = 5;
    CHECK_THROWS_AS(integrate(needle, 0.0, 1.0, tight), QuadratureError);
    QuadratureConfig bad_cfg;
    bad_cfg.rel_tol = -1.0;
    CHECK_THROWS_AS(bad_cfg.validate(), DomainError);
}

TEST_CASE("semi-infinite alternating tail: cos x / (1+x^2)") {
    // int_0^inf cos(x)/(1+x^2) dx = pi/(2e)
    auto f = [](double x) { return std::cos(x) / (1.0 + x * x); };
    QuadratureConfig cfg;
    cfg.tail_exponent_hint = 2.0;
    cfg.osc_cycle_tol = 1e-10;
    EvalResult r = integrate_oscillatory(f, 0.0, kPi, cfg);
    double exact = kPi / (2.0 * std::exp(1.0));
    CHECK(std::fabs(r.value - exact) < 1e-7);
    CHECK(std::fabs(r.value - exact) < 10.0 * r.abs_error_estimate + 1e-12);
}

TEST_CASE("semi-infinite same-sign power-law tail") {
    // int_1^inf x^-3 dx = 1/2; cycles are same-sign, tail is extrapolated
    auto f = [](double x) { return std::pow(x, -3.0); };
    QuadratureConfig cfg;
    cfg.tail_exponent_hint = 3.0;
    cfg.osc_cycle_tol = 1e-5;
    EvalResult r = integrate_oscillatory(f, 1.0, kPi, cfg);
    CHECK(std::fabs(r.value - 0.5) < 1e-4);
}

TEST_CASE("divergent oscillatory input is detected") {
    // non-decaying input must error out, either as detected divergence or as
    // exhaustion of the subdivision budget
    auto f = [](double x) { return std::cos(x); };
    CHECK_THROWS_AS(integrate_oscillatory(f, 0.0, kPi), NumericalError);
}
