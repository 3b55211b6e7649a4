#include "gwf/wendland.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "gwf/errors.hpp"
#include "gwf/special.hpp"

namespace gwf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

WendlandParams::WendlandParams(double mu_, double alpha_, double epsilon_, int d_)
    : mu(mu_), alpha(alpha_), epsilon(epsilon_), d(d_), lambda(0.5 * (d_ + 1) + alpha_) {
    if (!(mu > -1.0)) throw DomainError("WendlandParams: requires mu > -1");
    if (!(alpha > 0.0)) throw DomainError("WendlandParams: requires alpha > 0");
    if (!(epsilon > 0.0)) throw DomainError("WendlandParams: requires epsilon > 0");
    if (d < 1) throw DomainError("WendlandParams: requires d >= 1");
}

void WendlandParams::require_sphere() const {
    if (d < 2)
        throw DomainError("sphere operations require d >= 2");
    if (epsilon < 0.5)
        throw DomainError(
            "sphere operations require epsilon >= 1/2 (cap radius undefined below)");
}

double truncated_power(double r, const WendlandParams& params) {
    if (r < 0.0) throw DomainError("truncated_power: r < 0");
    double s = params.epsilon * r;
    if (s >= 1.0) return 0.0;
    return std::pow(1.0 - s, params.mu);
}

double wendland_at_zero(const WendlandParams& params) {
    // integral_0^1 (1-t)^mu t^{2 alpha - 1} dt = B(2 alpha, mu + 1)
    double logv = log_gamma(2.0 * params.alpha).log_abs + log_gamma(params.mu + 1.0).log_abs -
                  log_gamma(2.0 * params.alpha + params.mu + 1.0).log_abs -
                  (params.alpha - 1.0) * std::log(2.0) - log_gamma(params.alpha).log_abs;
    return std::exp(logv);
}

EvalResult wendland_eval(double r, const WendlandParams& params, const QuadratureConfig& cfg) {
    if (r < 0.0) throw DomainError("wendland_eval: r < 0");
    const double s = params.epsilon * r;
    if (s >= 1.0) return {0.0, 0.0, Method::Quadrature, 0, 1.0, false};

    const double mu = params.mu;
    const double am1 = params.alpha - 1.0;
    const double norm =
        std::exp(-(params.alpha - 1.0) * std::log(2.0) - log_gamma(params.alpha).log_abs);

    EvalResult q;
    if (am1 >= 0.0) {
        auto integrand = [&](double t) {
            return std::pow(1.0 - t, mu) * t * std::pow(t * t - s * s, am1);
        };
        q = integrate(integrand, s, 1.0, cfg);
    } else {
        // alpha < 1 makes the lower endpoint singular; substitute t = s + v^2
        // so (t^2 - s^2)^{alpha-1} = v^{2(alpha-1)} (2s + v^2)^{alpha-1} and the
        // v-integrand is regular for alpha >= 1/2 (and integrable above 1/4)
        auto integrand = [&](double v) {
            double t = s + v * v;
            return 2.0 * std::pow(1.0 - t, mu) * t * std::pow(v, 2.0 * am1 + 1.0) *
                   std::pow(2.0 * s + v * v, am1);
        };
        q = integrate(integrand, 0.0, std::sqrt(1.0 - s), cfg);
    }
    q.value *= norm;
    q.abs_error_estimate *= norm;
    return q;
}

double PiecewisePolynomial::operator()(double s) const {
    if (s > 1.0) return 0.0;
    double v = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * s + *it;
    return v;
}

PiecewisePolynomial polynomial_closed_form(const WendlandParams& params) {
    if (!(near_integer(params.mu) && params.mu >= 1.0 &&
          near_integer(params.alpha) && params.alpha >= 1.0))
        throw DomainError("polynomial_closed_form: requires positive integer mu and alpha");
    const std::int64_t mu = std::llround(params.mu);
    const std::int64_t alpha = std::llround(params.alpha);

    auto binom = [](std::int64_t n, std::int64_t k) {
        BigInt b = 1;
        for (std::int64_t i = 0; i < k; ++i) {
            b *= (n - i);
            b /= (i + 1);
        }
        return b;
    };

    const std::int64_t degree = mu + 2 * alpha;
    std::vector<Rational> coeffs(degree + 1, Rational(0));

    // expand (t^2 - s^2)^{alpha-1} (1-t)^mu t and integrate monomials over [s, 1]
    for (std::int64_t i = 0; i <= alpha - 1; ++i) {
        BigInt ci = binom(alpha - 1, i);
        for (std::int64_t k = 0; k <= mu; ++k) {
            BigInt ck = binom(mu, k);
            Rational c(ci * ck);
            if ((i + k) % 2 == 1) c = -c;
            std::int64_t p = k + 2 * (alpha - 1 - i) + 1;  // t-power
            // integral_s^1 t^p dt = (1 - s^{p+1})/(p+1); extra factor s^{2i}
            Rational inv(1, p + 1);
            coeffs[2 * i] += c * inv;
            coeffs[2 * i + p + 1] -= c * inv;
        }
    }

    // normalization 1 / (2^{alpha-1} (alpha-1)!)
    BigInt denom = 1;
    for (std::int64_t i = 1; i < alpha; ++i) denom *= 2 * i;  // 2^{a-1} (a-1)!
    for (auto& c : coeffs) c /= Rational(denom);

    PiecewisePolynomial poly;
    poly.rational_coefficients.reserve(coeffs.size());
    poly.coefficients.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        poly.rational_coefficients.push_back(c.str());
        poly.coefficients.push_back(static_cast<double>(c));
    }
    return poly;
}

}  // namespace gwf
