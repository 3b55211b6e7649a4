#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gwf/errors.hpp"
#include "gwf/pfq.hpp"
#include "gwf/special.hpp"

using namespace gwf;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("elementary reductions") {
    // 0F0(;;z) = e^z
    CHECK(rel(eval_pfq(HyperSeries({}, {}, 1.5)).value, std::exp(1.5)) < 1e-14);
    // 1F1(1;2;z) = (e^z - 1)/z
    CHECK(rel(eval_pfq(HyperSeries({1.0}, {2.0}, 0.7)).value,
              (std::exp(0.7) - 1.0) / 0.7) < 1e-14);
    // 2F1(1,1;2;z) = -log(1-z)/z
    CHECK(rel(eval_pfq(HyperSeries({1.0, 1.0}, {2.0}, 0.5)).value,
              -std::log(0.5) / 0.5) < 1e-13);
    // empty-series edge cases
    CHECK(eval_pfq(HyperSeries({-0.0}, {1.0}, 2.0)).value == 1.0);
    CHECK(eval_pfq(HyperSeries({2.0}, {3.0}, 0.0)).value == 1.0);
}

TEST_CASE("slowly convergent 2F1 tail near z = 1 (acceleration)") {
    EvalResult r = eval_pfq(HyperSeries({1.0, 1.0}, {2.0}, 0.97));
    CHECK(rel(r.value, -std::log(0.03) / 0.97) < 1e-9);
}

TEST_CASE("terminating series: Chu-Vandermonde") {
    // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    double b = 1.3, c = 4.2;
    for (int n : {1, 3, 8}) {
        EvalResult r = eval_pfq(HyperSeries({-static_cast<double>(n), b}, {c}, 1.0));
        double exact = pochhammer(c - b, n) / pochhammer(c, n);
        CHECK(rel(r.value, exact) < 1e-13);
        CHECK(r.terms_or_nodes <= n + 1);
    }
}

TEST_CASE("forced methods agree within combined error estimates") {
    HyperSeries s({3.0}, {5.0, 5.5}, -100.0);  // 1F2 with visible cancellation
    SummationPolicy pol;
    pol.force = ForcedMethod::PlainSum;
    EvalResult a = eval_pfq(s, pol);
    pol.force = ForcedMethod::LogDomainSigned;
    EvalResult b = eval_pfq(s, pol);
    pol.force = ForcedMethod::ExtendedPrecision;
    EvalResult c = eval_pfq(s, pol);
    CHECK(std::fabs(a.value - c.value) <= 2.0 * (a.abs_error_estimate + c.abs_error_estimate));
    CHECK(std::fabs(b.value - c.value) <= 2.0 * (b.abs_error_estimate + c.abs_error_estimate));
    CHECK(c.cancellation_ratio > 1e2);
}

TEST_CASE("extended precision recovers heavy cancellation") {
    // 1F2(3; 5, 5.5; -t^2) at t=20: plain doubles lose ~12 digits
    double t = 20.0;
    HyperSeries s({3.0}, {5.0, 5.5}, -t * t);
    EvalResult r = eval_pfq(s);
    CHECK(r.method == Method::ExtendedPrecision);
    // reference from the Bessel-kernel integral representation (independent)
    // value agrees with the large-argument expansion to its O(1/t) accuracy
    double g = gamma_fn(5.0) * gamma_fn(5.5) / (gamma_fn(2.0) * gamma_fn(2.5));
    double lead = g * std::pow(t, -6.0);
    double chi = 5.0 + 5.5 - 3.0 - 0.5;
    double osc = gamma_fn(5.0) * gamma_fn(5.5) / (std::sqrt(kPi) * gamma_fn(3.0)) *
                 std::pow(t, -chi) * std::cos(2.0 * t - 0.5 * kPi * chi);
    CHECK(rel(r.value, lead + osc) < 0.05);
    CHECK(r.abs_error_estimate < 1e-8 * std::fabs(r.value));
}

TEST_CASE("gamma duplication identity") {
    for (double x : {0.7, 2.3, 11.5}) {
        double lhs = log_gamma(2.0 * x).log_abs;
        double rhs = (2.0 * x - 1.0) * std::log(2.0) - 0.5 * std::log(kPi) +
                     log_gamma(x).log_abs + log_gamma(x + 0.5).log_abs;
        CHECK(std::fabs(lhs - rhs) < 1e-13 * std::max(1.0, std::fabs(lhs)));
    }
}

TEST_CASE("0F1 Bessel identity") {
    // J_nu(x) = (x/2)^nu / Gamma(nu+1) 0F1(; nu+1; -x^2/4)
    // the alternating series cancels ~e^{2x} digits: escalate early so the
    // extended-precision pass carries the comparison
    SummationPolicy policy;
    policy.escalate_cancellation = 1e2;
    for (double nu : {0.0, 1.5, 4.0}) {
        for (double x : {0.8, 6.0, 20.0}) {
            double f = eval_pfq(HyperSeries({}, {nu + 1.0}, -0.25 * x * x), policy).value;
            double j = std::pow(0.5 * x, nu) / gamma_fn(nu + 1.0) * f;
            CHECK(rel(j, bessel_j(nu, x)) < 1e-11);
        }
    }
}

TEST_CASE("domain and divergence guards") {
    // non-terminating 2F1 outside |z| <= 1
    CHECK_THROWS_AS(eval_pfq(HyperSeries({1.0, 2.0}, {3.0}, 1.5)), DivergenceError);
    // p > q+1 non-terminating diverges
    CHECK_THROWS_AS(eval_pfq(HyperSeries({1.0, 1.0, 1.0}, {2.0}, 0.5)), DivergenceError);
    // non-positive-integer denominator parameter
    CHECK_THROWS_AS(HyperSeries({1.0}, {-2.0}, 0.5), PoleError);
    // terminating series with huge z is fine even when p > q+1
    CHECK(std::isfinite(eval_pfq(HyperSeries({-4.0, 2.0, 3.0}, {1.5}, 7.0)).value));
}

TEST_CASE("cancellation beyond budget throws instead of returning noise") {
    // 1F2 at t = 40: cancellation ~ e^80 exceeds any double-double budget
    double t = 40.0;
    CHECK_THROWS_AS(eval_pfq(HyperSeries({3.0}, {5.0, 5.5}, -t * t)),
                    PrecisionExhaustedError);
}
