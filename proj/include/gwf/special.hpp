#pragma once

#include <cstdint>

namespace gwf {

// Signed log-domain representation: sign * exp(log_abs).
// sign == 0 encodes an exact zero (log_abs is then meaningless).
struct LogSigned {
    double log_abs = 0.0;
    int sign = 1;

    double to_double() const;
};

// log |Gamma(x)| and the sign of Gamma(x). Throws PoleError at
// non-positive integers. Negative non-integer arguments go through the
// reflection formula.
LogSigned log_gamma(double x);

// Gamma(x) as a double; overflows to +/-inf for large |log|.
double gamma_fn(double x);

// Rising factorial (c)_n = c(c+1)...(c+n-1), (c)_0 = 1.
double pochhammer(double c, std::int64_t n);

// Log-signed rising factorial for large n. Exact zero when the product
// crosses a non-positive-integer root of (c)_n.
LogSigned pochhammer_log(double c, std::int64_t n);

// Bessel function of the first kind, real order nu >= -1/2, x >= 0.
// Power series for small x, Hankel asymptotic expansion plus forward
// order recurrence for large x.
double bessel_j(double nu, double x);

// J_nu(x) / x^nu, finite as x -> 0 (limit 1 / (2^nu Gamma(nu+1))).
// Safe where x^nu alone would under- or overflow.
double bessel_j_scaled(double nu, double x);

// Gegenbauer polynomial C_m^{lambda}(t) by the three-term recurrence.
// For lambda == 0 the Chebyshev limit convention is used and the value
// returned is C_m^0(cos theta)/C_m^0(1) = cos(m theta).
double gegenbauer(std::int64_t m, double lambda, double t);

// C_m^{lambda}(t) / C_m^{lambda}(1); equals cos(m*acos(t)) for lambda == 0.
double gegenbauer_normalized(std::int64_t m, double lambda, double t);

// True if x is within tol of an integer.
bool near_integer(double x, double tol = 1e-12);

}  // namespace gwf
