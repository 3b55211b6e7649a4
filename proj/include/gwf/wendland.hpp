#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwf/eval_result.hpp"
#include "gwf/quadrature.hpp"

namespace gwf {

// Parameter bundle (mu, alpha, epsilon, d) with the derived smoothness
// aggregate lambda = (d+1)/2 + alpha. Support radius is 1/epsilon.
struct WendlandParams {
    double mu;
    double alpha;
    double epsilon;
    int d;
    double lambda;  // derived

    WendlandParams(double mu_, double alpha_, double epsilon_, int d_);

    // positive definite on R^d iff mu >= lambda
    bool pd_euclidean() const { return mu >= lambda; }
    // sphere restriction requires d >= 2 and epsilon >= 1/2
    bool sphere_usable() const { return d >= 2 && epsilon >= 0.5; }
    void require_sphere() const;
};

// (1 - epsilon r)_+^mu
double truncated_power(double r, const WendlandParams& params);

// phi_{mu,alpha}^{(epsilon)}(r) by adaptive quadrature of the defining
// integral; exact 0 for epsilon*r >= 1.
EvalResult wendland_eval(double r, const WendlandParams& params,
                         const QuadratureConfig& cfg = {});

// Exact closed form at r = 0: Beta-integral reduction.
double wendland_at_zero(const WendlandParams& params);

// Exact rational polynomial in s = epsilon*r on [0,1] for positive integer
// (mu, alpha); value is 0 for s > 1.
struct PiecewisePolynomial {
    // coefficients c_0..c_N, both as decimal-string rationals and doubles
    std::vector<std::string> rational_coefficients;
    std::vector<double> coefficients;

    double operator()(double s) const;
};

PiecewisePolynomial polynomial_closed_form(const WendlandParams& params);

}  // namespace gwf
