#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gwf/eval_result.hpp"
#include "gwf/quadrature.hpp"
#include "gwf/wendland.hpp"

namespace gwf {

// Support geometry of the sphere restriction: a spherical cap of radius
// theta_support, the whole sphere exactly at epsilon = 1/2.
struct CapGeometry {
    double theta_support;

    explicit CapGeometry(const WendlandParams& params);
};

// Coefficient table psi_hat(0..M) for one parameter bundle, with per-entry
// method and error metadata.
struct SchoenbergTable {
    WendlandParams params;
    std::int64_t max_degree;
    double prefactor;
    std::vector<EvalResult> coeffs;

    const EvalResult& at(std::int64_t m) const { return coeffs.at(m); }
};

// (2 pi)^{(d-1)/2} C_{lambda-1/2,mu} / (sqrt(2 pi) epsilon^{d-1})
double schoenberg_prefactor(const WendlandParams& params);

// Closed-form spherical Fourier coefficient: prefactor times the 3F2 at
// argument 1/(4 epsilon^2). Direct summation escalates through the
// cancellation ladder; beyond the extended-precision budget the 3F2 is
// evaluated through a stable Beta-integral reduction (method: quadrature).
EvalResult coeff_closed(std::int64_t m, const WendlandParams& params,
                        const QuadratureConfig& cfg = {});

// Oracle 1: oscillatory connection integral over the Euclidean transform.
EvalResult coeff_oracle_linkup(std::int64_t m, const WendlandParams& params,
                               const QuadratureConfig& cfg = {});

// Oracle 2: Gegenbauer projection of the restricted kernel.
EvalResult coeff_oracle_projection(std::int64_t m, const WendlandParams& params,
                                   const QuadratureConfig& cfg = {});

// Closed-form series for the finite connection integral I_gamma(r)
// (0 < r <= ~10); cross-checked against direct quadrature.
EvalResult finite_integral_series(double gamma, double r, const WendlandParams& params,
                                  std::int64_t truncation = 0);

// Direct quadrature of the finite connection integral (the cross-check).
EvalResult finite_integral_quadrature(double gamma, double r, const WendlandParams& params,
                                      const QuadratureConfig& cfg = {});

// Precise asymptotic decay of the coefficients.
double coeff_asymptotic(std::int64_t m, const WendlandParams& params);

// Decay constant K_{mu,alpha}^{(dim)} tying together the Euclidean and
// spherical asymptotics.
double kappa_constant(const WendlandParams& params, int dim);

// Asymptotic expansion of the terminating 3F2 itself (odd d only);
// with_oscillatory adds the cosine (epsilon > 1/2) or parity (epsilon = 1/2)
// correction term.
double asymptotic_3f2(std::int64_t m, const WendlandParams& params, bool with_oscillatory);

// Dimension of the space of spherical harmonics of degree m on S^{d-1}.
std::int64_t n_mdim(std::int64_t m, int d);

// Surface area of the unit sphere S^k.
double sphere_surface(int k);

SchoenbergTable build_schoenberg_table(const WendlandParams& params, std::int64_t max_degree,
                                       const QuadratureConfig& cfg = {});

// Zonal kernel reconstruction at t = cos(theta) from a coefficient table;
// abs_error_estimate carries the asymptotic truncation tail.
EvalResult reconstruct_kernel(double t, const SchoenbergTable& table);

// Empirical Sobolev bound constants: min/max over m of
// psi_hat(m) (1+m^2)^{lambda-1/2} / epsilon^{2 alpha + 1}.
std::pair<double, double> sobolev_bounds_sphere(const SchoenbergTable& table);

}  // namespace gwf
