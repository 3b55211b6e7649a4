#pragma once

#include <utility>
#include <vector>

#include "gwf/eval_result.hpp"
#include "gwf/quadrature.hpp"
#include "gwf/wendland.hpp"

namespace gwf {

// Gamma-ratio constant of the closed-form transform and the full prefactor.
struct FourierConstants {
    double c_lambda_mu;  // 2^lambda Gamma(lambda) Gamma(mu+1) / Gamma(2 lambda + mu)
    double prefactor;    // c_lambda_mu / (sqrt(2 pi) epsilon^d)

    explicit FourierConstants(const WendlandParams& params);
};

// d-dimensional Fourier transform in closed hypergeometric form. Escalates
// to the large-argument asymptotic expansion once the series cancellation
// exceeds the extended-precision budget.
EvalResult ft_closed(double z, const WendlandParams& params);

// Independent quadrature route: the radial Fourier (Hankel-type) integral
// over the compact support.
EvalResult ft_oracle(double z, const WendlandParams& params, const QuadratureConfig& cfg = {});

// Leading-order decay law; with include_oscillatory, adds the cosine
// correction term.
double ft_asymptotic(double z, const WendlandParams& params, bool include_oscillatory = false);

// Empirical two-sided Sobolev bound constants: min/max over the grid of
// ft_closed(z) (1+z^2)^lambda / epsilon^{2 alpha + 1}. Requires mu >= lambda.
std::pair<double, double> sobolev_bounds_euclid(const WendlandParams& params,
                                                const std::vector<double>& z_grid);

}  // namespace gwf
