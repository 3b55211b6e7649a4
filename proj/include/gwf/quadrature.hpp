#pragma once

#include <cstdint>
#include <functional>

#include "gwf/eval_result.hpp"

namespace gwf {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::int64_t max_subdivisions = 2000;
    // oscillatory integrator: stop once the estimated remainder drops below
    // osc_cycle_tol relative to the accumulated value
    double osc_cycle_tol = 1e-12;
    // envelope decay exponent p of the integrand tail (|f| ~ x^-p), used for
    // the analytic tail bound of integrate_oscillatory
    double tail_exponent_hint = 2.0;

    void validate() const;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod 7/15 over a finite interval. Integrable endpoint
// singularities (t-a)^beta, beta > -1, are resolved by bisection toward the
// endpoint; Kronrod nodes never touch the endpoints.
EvalResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg = {});

// Semi-infinite integral of an eventually oscillatory integrand with
// asymptotic inter-zero spacing ~ zero_spacing and an envelope decaying like
// x^-p (p = tail_exponent_hint > 1). Integrates cycle by cycle, accelerates
// alternating cycle sums, and folds an analytic tail bound into the error
// estimate. Degenerates gracefully for non-oscillatory decaying integrands.
EvalResult integrate_oscillatory(const Integrand& f, double a, double zero_spacing,
                                 const QuadratureConfig& cfg = {});

}  // namespace gwf
