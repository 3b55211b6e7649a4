#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gwf/errors.hpp"
#include "gwf/fourier.hpp"

using namespace gwf;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("closed form vs quadrature oracle across dimensions") {
    for (int d : {1, 2, 3, 5}) {
        WendlandParams p(0.5 * (d + 1) + 1.0, 1.0, 1.0, d);  // mu = lambda
        for (double z : {0.1, 2.0, 15.0}) {
            double c = ft_closed(z, p).value;
            double o = ft_oracle(z, p).value;
            CHECK(rel(c, o) < 1e-9);
        }
    }
}

TEST_CASE("value at z -> 0 approaches the prefactor") {
    WendlandParams p(4.0, 1.0, 1.0, 3);
    FourierConstants c(p);
    CHECK(rel(ft_closed(1e-8, p).value, c.prefactor) < 1e-10);
}

TEST_CASE("evaluation regimes hand over continuously") {
    WendlandParams p(4.0, 1.0, 1.0, 3);
    // series -> Bessel-kernel quadrature at t = 25 (z = 50)
    EvalResult lo = ft_closed(49.99, p);
    EvalResult hi = ft_closed(50.01, p);
    CHECK(lo.method == Method::ExtendedPrecision);
    CHECK(hi.method == Method::Quadrature);
    // the transform itself moves over the 0.02 gap, so only ask for rough
    // continuity here; the tight statement is agreement with the oracle
    CHECK(std::fabs(hi.value - lo.value) < 1e-2 * std::fabs(lo.value));
    CHECK(rel(hi.value, ft_oracle(50.01, p).value) < 1e-8);
    // quadrature -> asymptotic at t = 4000 (z = 8000)
    EvalResult qa = ft_closed(7999.0, p);
    EvalResult aa = ft_closed(8001.0, p);
    CHECK(qa.method == Method::Quadrature);
    CHECK(aa.method == Method::Asymptotic);
    // compare at matched phase one full period apart (period 2 pi eps)
    double period = 2.0 * 3.14159265358979323846 * p.epsilon;
    CHECK(rel(ft_closed(8001.0 + period, p).value, ft_closed(8001.0, p).value) < 0.2);
}

TEST_CASE("positivity for mu >= lambda") {
    WendlandParams p(3.0, 0.5, 0.5, 3);
    for (double z = 0.5; z <= 100.0; z += 0.5)
        CHECK(ft_closed(z, p).value > 0.0);
}

TEST_CASE("asymptotic decay law") {
    WendlandParams p(4.0, 1.0, 1.0, 3);
    // leading term only: ratio of closed/lead averaged over one period -> 1
    double z = 500.0;
    double period = 2.0 * 3.14159265358979323846 * p.epsilon;
    int n = 32;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double zi = z + period * i / n;
        acc += ft_closed(zi, p).value / ft_asymptotic(zi, p, false);
    }
    acc /= n;
    CHECK(std::fabs(acc - 1.0) < 0.02);
    // with the oscillatory correction the pointwise ratio is much tighter
    CHECK(rel(ft_closed(z, p).value, ft_asymptotic(z, p, true)) < 1e-3);
}

TEST_CASE("sobolev bound constants") {
    WendlandParams p(4.0, 1.0, 1.0, 3);
    std::vector<double> grid;
    for (int i = 1; i <= 200; ++i) grid.push_back(0.25 * i);
    auto [c1, c2] = sobolev_bounds_euclid(p, grid);
    CHECK(c1 > 0.0);
    CHECK(c2 >= c1);
    CHECK_THROWS_AS(sobolev_bounds_euclid(WendlandParams(2.0, 1.0, 1.0, 3), grid),
                    DomainError);
}

TEST_CASE("domain guards") {
    WendlandParams p(4.0, 1.0, 1.0, 3);
    CHECK_THROWS_AS(ft_closed(-1.0, p), DomainError);
    CHECK_THROWS_AS(ft_oracle(0.0, p), DomainError);
    CHECK_THROWS_AS(ft_asymptotic(0.0, p), DomainError);
}
