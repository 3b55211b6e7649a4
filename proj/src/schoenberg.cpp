#include "gwf/schoenberg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "gwf/errors.hpp"
#include "gwf/fourier.hpp"
#include "gwf/pfq.hpp"
#include "gwf/special.hpp"

namespace gwf {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrt2Pi = 2.50662827463100050241576528481104525;

struct CoeffParams {
    double a1, a2, a3;  // numerators: -(m+(d-3)/2), m+(d-1)/2, lambda-1/2
    double b1, b2;      // lambda+(mu-1)/2, lambda+mu/2
    double z;           // 1/(4 epsilon^2)
    double nu;          // m+(d-3)/2

    CoeffParams(std::int64_t m, const WendlandParams& p)
        : a1(-(static_cast<double>(m) + 0.5 * (p.d - 3))),
          a2(static_cast<double>(m) + 0.5 * (p.d - 1)),
          a3(p.lambda - 0.5),
          b1(p.lambda + 0.5 * (p.mu - 1.0)),
          b2(p.lambda + 0.5 * p.mu),
          z(1.0 / (4.0 * p.epsilon * p.epsilon)),
          nu(static_cast<double>(m) + 0.5 * (p.d - 3)) {}
};

// log of the largest term magnitude of the direct series; proxy for the
// digits a plain summation would cancel away.
double log_peak_term(const HyperSeries& s) {
    double lt = 0.0, peak = 0.0;
    std::int64_t limit = s.terminating ? s.termination_index : 20000;
    for (std::int64_t j = 0; j < limit; ++j) {
        double jd = static_cast<double>(j);
        double r = std::fabs(s.argument) / (jd + 1.0);
        for (double a : s.numerators) r *= std::fabs(a + jd);
        for (double b : s.denominators) r /= std::fabs(b + jd);
        if (r == 0.0) break;
        lt += std::log(r);
        peak = std::max(peak, lt);
        if (lt < peak - 200.0) break;
    }
    return peak;
}

// 2F1(a, b; c; x) by direct series. The two seed cases used here
// (a, b in {1/2} and {-1/2, 3/2}) have fixed-sign terms, so there is no
// cancellation; convergence is slow only as x -> 1.
double hyp2f1_series(double a, double b, double c, double x) {
    double term = 1.0, sum = 1.0, comp = 0.0;
    for (std::int64_t k = 0; k < 2000000; ++k) {
        double kd = static_cast<double>(k);
        term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * x;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) return sum;
    }
    throw NumericalError("hyp2f1_series: no convergence");
}

// Euler-integral evaluation of 2F1(a, b; c; x), 0 <= x < 1, c > b > 0.
double hyp2f1_euler(double a, double b, double c, double x, const QuadratureConfig& cfg) {
    double log_beta = log_gamma(b).log_abs + log_gamma(c - b).log_abs - log_gamma(c).log_abs;
    auto f = [&](double s) {
        return std::pow(s, b - 1.0) * std::pow(1.0 - s, c - b - 1.0) * std::pow(1.0 - x * s, -a);
    };
    return integrate(f, 0.0, 1.0, cfg).value * std::exp(-log_beta);
}

double hyp2f1_seed(double a, double b, double c, double x, const QuadratureConfig& cfg) {
    if (x <= 0.98 || c <= b + 1e-8) return hyp2f1_series(a, b, c, x);
    return hyp2f1_euler(a, b, c, x, cfg);
}

// 2F1(-nu, nu+1; c; x), nu a non-negative integer or half-integer >= -1/2,
// by the degree recurrence on g_nu = Gamma(nu+c)/(Gamma(nu+1) Gamma(c)) f_nu:
//   nu g_nu = (2nu-1)(1-2x) g_{nu-1} - (nu+c-2)(nu-c)/(nu-1) g_{nu-2}.
// Upward recursion in the degree is stable for x in [0, 1].
double jacobi_2f1(double nu, double c, double x, const QuadratureConfig& seed_cfg) {
    const bool integer_case = near_integer(nu, 1e-9);
    const double base = integer_case ? 0.0 : -0.5;
    if (!near_integer(nu - base, 1e-9) || nu < base - 1e-9)
        throw DomainError("jacobi_2f1: degree must be a non-negative integer or half-integer");
    const std::int64_t steps = std::llround(nu - base);

    if (integer_case) {
        if (steps == 0) return 1.0;
        if (steps == 1) return 1.0 - 2.0 * x / c;
    } else {
        if (steps == 0) return hyp2f1_seed(0.5, 0.5, c, x, seed_cfg);
        if (steps == 1) return hyp2f1_seed(-0.5, 1.5, c, x, seed_cfg);
    }

    double g0, g1;
    if (integer_case) {
        g0 = 1.0;
        g1 = c - 2.0 * x;
    } else {
        double s0 = hyp2f1_seed(0.5, 0.5, c, x, seed_cfg);
        double s1 = hyp2f1_seed(-0.5, 1.5, c, x, seed_cfg);
        g0 = std::exp(log_gamma(c - 0.5).log_abs - log_gamma(0.5).log_abs -
                      log_gamma(c).log_abs) * s0;
        g1 = std::exp(log_gamma(c + 0.5).log_abs - log_gamma(1.5).log_abs -
                      log_gamma(c).log_abs) * s1;
    }

    const double u = 1.0 - 2.0 * x;
    const double A = c - 1.0;
    double gm2 = g0, gm1 = g1, g = g1;
    for (std::int64_t k = 2; k <= steps; ++k) {
        double v = base + static_cast<double>(k);
        g = ((2.0 * v - 1.0) * u * gm1 - (v + A - 1.0) * (v - A - 1.0) / (v - 1.0) * gm2) / v;
        gm2 = gm1;
        gm1 = g;
    }
    return g * std::exp(log_gamma(nu + 1.0).log_abs - log_gamma(nu + c).log_abs +
                        log_gamma(c).log_abs);
}

// Retry with loosened tolerances when the requested accuracy sits below the
// double-precision roundoff floor of the panel sums.
EvalResult integrate_with_backoff(const Integrand& f, double a, double b, QuadratureConfig qc) {
    for (int attempt = 0;; ++attempt) {
        try {
            return integrate(f, a, b, qc);
        } catch (const QuadratureError&) {
            if (attempt >= 2) throw;
            qc.rel_tol *= 100.0;
            qc.abs_tol *= 100.0;
        }
    }
}

// The 3F2 of the coefficient formula through the Beta-integral reduction
//   3F2(-nu, nu+1, a; b1, b2; z)
//     = (1/B(a, b2-a)) \int_0^1 t^{a-1} (1-t)^{b2-a-1} 2F1(-nu, nu+1; b1; zt) dt,
// which sidesteps the catastrophic cancellation of the direct sum.
EvalResult stable_3f2(std::int64_t m, const WendlandParams& p, const QuadratureConfig& cfg) {
    const CoeffParams cp(m, p);
    const double a = cp.a3;

    QuadratureConfig inner = cfg;
    inner.rel_tol = std::min(cfg.rel_tol, 1e-10);
    inner.abs_tol = 1e-280;
    inner.max_subdivisions = std::max<std::int64_t>(cfg.max_subdivisions, 6 * m + 600);

    QuadratureConfig seed_cfg;
    seed_cfg.rel_tol = 1e-12;
    seed_cfg.abs_tol = 1e-250;
    seed_cfg.max_subdivisions = 500;

    double log_beta = log_gamma(a).log_abs + log_gamma(cp.b2 - a).log_abs -
                      log_gamma(cp.b2).log_abs;
    auto f = [&](double t) {
        return std::pow(t, a - 1.0) * std::pow(1.0 - t, cp.b2 - a - 1.0) *
               jacobi_2f1(cp.nu, cp.b1, cp.z * t, seed_cfg);
    };
    EvalResult q = integrate_with_backoff(f, 0.0, 1.0, inner);
    double scale = std::exp(-log_beta);
    q.value *= scale;
    q.abs_error_estimate *= scale;
    return q;
}

}  // namespace

CapGeometry::CapGeometry(const WendlandParams& params) {
    params.require_sphere();
    double cz = 1.0 - 1.0 / (2.0 * params.epsilon * params.epsilon);
    theta_support = std::acos(std::clamp(cz, -1.0, 1.0));
}

double schoenberg_prefactor(const WendlandParams& p) {
    double log_c = (p.lambda - 0.5) * std::log(2.0) + log_gamma(p.lambda - 0.5).log_abs +
                   log_gamma(p.mu + 1.0).log_abs -
                   log_gamma(2.0 * p.lambda + p.mu - 1.0).log_abs;
    return std::pow(2.0 * kPi, 0.5 * (p.d - 1)) * std::exp(log_c) /
           (kSqrt2Pi * std::pow(p.epsilon, p.d - 1));
}

EvalResult coeff_closed(std::int64_t m, const WendlandParams& params,
                        const QuadratureConfig& cfg) {
    params.require_sphere();
    if (m < 0) throw DomainError("coeff_closed: m < 0");
    const CoeffParams cp(m, params);
    const double pref = schoenberg_prefactor(params);
    const bool warn = params.mu < params.lambda;

    HyperSeries series({cp.a1, cp.a2, cp.a3}, {cp.b1, cp.b2}, cp.z);

    // Pre-estimate the direct-series cancellation against the expected
    // magnitude of the result; beyond the extended-precision budget the
    // direct sum cannot recover the value and we go straight to the stable
    // Beta-integral route.
    double peak = log_peak_term(series);
    double log_expected = 0.0;
    bool have_expected = false;
    try {
        double mbar = cp.a2;  // m + (d-1)/2
        log_expected = log_gamma(2.0 * params.lambda + params.mu - 1.0).log_abs +
                       (2.0 * params.lambda - 1.0) * std::log(params.epsilon) -
                       log_gamma(params.mu).log_abs -
                       (2.0 * params.lambda - 1.0) * std::log(mbar);
        have_expected = true;
    } catch (const NumericalError&) {
    }
    bool force_stable = have_expected && (peak - log_expected > std::log(1e20));

    EvalResult r;
    bool used_stable = false;
    if (!force_stable) {
        try {
            // escalate to extended precision early: a plain sum at the default
            // 1e10 threshold leaves ~1e-6 relative noise, short of the 1e-7
            // cross-route agreement the oracles hold us to
            SummationPolicy policy;
            policy.escalate_cancellation = 1e4;
            r = eval_pfq(series, policy);
            if (r.method == Method::ExtendedPrecision && r.cancellation_ratio > 1e20)
                used_stable = true;
        } catch (const PrecisionExhaustedError&) {
            used_stable = true;
        }
    }
    if (force_stable || used_stable) {
        r = stable_3f2(m, params, cfg);
        // report the cancellation the direct sum would have suffered
        double log_val = (r.value != 0.0) ? std::log(std::fabs(r.value)) : log_expected;
        r.cancellation_ratio = std::exp(std::min(700.0, std::max(0.0, peak - log_val)));
    }

    r.value *= pref;
    r.abs_error_estimate *= pref;
    r.warning = r.warning || warn;
    return r;
}

EvalResult coeff_oracle_linkup(std::int64_t m, const WendlandParams& params,
                               const QuadratureConfig& cfg) {
    params.require_sphere();
    if (m < 0) throw DomainError("coeff_oracle_linkup: m < 0");
    const double order = static_cast<double>(m) + 0.5 * (params.d - 2);

    auto f = [&](double z) {
        if (z <= 0.0) return 0.0;
        double bj = bessel_j(order, z);
        return z * bj * bj * ft_closed(z, params).value;
    };

    // ramp-up region before the first Bessel oscillation (J_order is tiny
    // for z < order), handled by plain quadrature
    double head = 0.0, head_err = 0.0;
    std::int64_t head_nodes = 0;
    double z0 = (order > 5.0) ? order : 0.0;
    if (z0 > 0.0) {
        QuadratureConfig hc = cfg;
        hc.rel_tol = std::min(cfg.rel_tol, 1e-11);
        hc.abs_tol = 1e-280;
        EvalResult h = integrate(f, 0.0, z0, hc);
        head = h.value;
        head_err = h.abs_error_estimate;
        head_nodes = h.terms_or_nodes;
    }

    QuadratureConfig oc = cfg;
    oc.tail_exponent_hint = 2.0 * params.lambda;
    // the integrand cycles are same-sign, so integrate_oscillatory folds the
    // power-law tail extrapolation into the value; a raw stop near 2e-5
    // leaves a residual well under 1e-6 at a fraction of the cycle count
    oc.osc_cycle_tol = std::max(cfg.osc_cycle_tol, 5e-6);
    EvalResult r = integrate_oscillatory(f, z0, kPi, oc);

    double scale = std::pow(2.0 * kPi, 0.5 * params.d);
    r.value = scale * (head + r.value);
    r.abs_error_estimate = scale * (head_err + r.abs_error_estimate);
    r.terms_or_nodes += head_nodes;
    return r;
}

EvalResult coeff_oracle_projection(std::int64_t m, const WendlandParams& params,
                                   const QuadratureConfig& cfg) {
    params.require_sphere();
    if (m < 0) throw DomainError("coeff_oracle_projection: m < 0");
    const CapGeometry cap(params);
    const double lam_g = 0.5 * (params.d - 2);
    const double omega = sphere_surface(params.d - 2);

    // fast exact kernel for integer (mu, alpha), quadrature otherwise
    std::function<double(double)> phi;
    if (near_integer(params.mu) && params.mu >= 1.0 && near_integer(params.alpha) &&
        params.alpha >= 1.0) {
        auto poly = polynomial_closed_form(params);
        double eps = params.epsilon;
        phi = [poly, eps](double r) { return poly(eps * r); };
    } else {
        QuadratureConfig wc = cfg;
        wc.rel_tol = 1e-12;
        // keep a sane absolute floor: for alpha < 1 the kernel integrand is
        // endpoint-singular and an extreme target drives the refinement into
        // overflow at the singularity
        wc.abs_tol = 1e-18;
        WendlandParams p = params;
        phi = [p, wc](double r) { return wendland_eval(r, p, wc).value; };
    }

    auto f = [&](double th) {
        double r = 2.0 * std::sin(0.5 * th);
        return phi(r) * gegenbauer_normalized(m, lam_g, std::cos(th)) *
               std::pow(std::sin(th), static_cast<double>(params.d - 2));
    };

    QuadratureConfig oc = cfg;
    oc.rel_tol = std::min(cfg.rel_tol, 1e-12);
    // floor the absolute target at a small fraction of the expected
    // coefficient size so high-degree projections terminate at roundoff
    double expected = coeff_asymptotic(std::max<std::int64_t>(m, 1), params) / omega;
    oc.abs_tol = std::max(1e-260, 1e-10 * expected);
    oc.max_subdivisions = std::max<std::int64_t>(cfg.max_subdivisions, 8 * m + 800);

    EvalResult r = integrate_with_backoff(f, 0.0, cap.theta_support, oc);
    r.value *= omega;
    r.abs_error_estimate *= omega;
    return r;
}

EvalResult finite_integral_series(double gamma, double r, const WendlandParams& params,
                                  std::int64_t truncation) {
    if (!(gamma > -0.5)) throw DomainError("finite_integral_series: requires gamma > -1/2");
    if (!(r > 0.0)) throw DomainError("finite_integral_series: requires r > 0");
    const double lam = params.lambda;
    const double b1 = lam + 0.5 * params.mu;
    const double b2 = lam + 0.5 * (params.mu + 1.0);
    const FourierConstants fc(params);

    double log_pref = std::log(fc.prefactor) + 0.5 * params.d * std::log(2.0 * kPi) -
                      2.0 * (gamma * std::log(2.0) + log_gamma(gamma + 1.0).log_abs) +
                      2.0 * (gamma + 1.0) * std::log(r) - std::log(2.0 * (gamma + 1.0));
    double pref = std::exp(log_pref);

    const double w = -r * r / (4.0 * params.epsilon * params.epsilon);
    const std::int64_t cap = (truncation > 0) ? truncation : 400;

    double c_l = 1.0;  // outer Pochhammer-ratio coefficient
    double sum = 0.0, comp = 0.0, max_partial = 0.0;
    double inner_err = 0.0, inner_cancel = 1.0;
    Method worst = Method::PlainSum;
    std::int64_t nodes = 0;
    int small_streak = 0;
    std::int64_t l = 0;
    for (; l < cap; ++l) {
        double ld = static_cast<double>(l);
        HyperSeries inner({gamma + 1.0 + ld, gamma + 0.5},
                          {gamma + 2.0 + ld, gamma + 1.0, 2.0 * gamma + 1.0}, -r * r);
        EvalResult fe = eval_pfq(inner);
        nodes += fe.terms_or_nodes;
        inner_err += std::fabs(c_l) * fe.abs_error_estimate;
        inner_cancel = std::max(inner_cancel, fe.cancellation_ratio);
        if (static_cast<int>(fe.method) > static_cast<int>(worst)) worst = fe.method;

        double term = c_l * fe.value;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        max_partial = std::max(max_partial, std::fabs(sum));

        if (std::fabs(term) < 1e-16 * std::max(std::fabs(sum), 1e-300)) {
            if (++small_streak >= 3) { ++l; break; }
        } else {
            small_streak = 0;
        }
        c_l *= (gamma + 1.0 + ld) * (lam + ld) /
               ((gamma + 2.0 + ld) * (b1 + ld) * (b2 + ld) * (ld + 1.0)) * w;
    }
    if (l >= cap && small_streak < 3 && truncation <= 0)
        throw NumericalError("finite_integral_series: outer series failed to converge");

    double outer_cancel = (sum != 0.0) ? std::max(1.0, max_partial / std::fabs(sum)) : 1.0;
    if (outer_cancel > 1e13)
        throw PrecisionExhaustedError(
            "finite_integral_series: outer cancellation exceeds double budget (r too large)");

    EvalResult out;
    out.value = pref * sum;
    out.abs_error_estimate = pref * (inner_err + 2.2e-16 * max_partial);
    out.method = worst;
    out.terms_or_nodes = nodes + l;
    out.cancellation_ratio = std::max(outer_cancel, inner_cancel);
    out.warning = false;
    return out;
}

EvalResult finite_integral_quadrature(double gamma, double r, const WendlandParams& params,
                                      const QuadratureConfig& cfg) {
    if (!(gamma > -0.5)) throw DomainError("finite_integral_quadrature: requires gamma > -1/2");
    if (!(r > 0.0)) throw DomainError("finite_integral_quadrature: requires r > 0");
    auto f = [&](double z) {
        if (z <= 0.0) return 0.0;
        double bj = bessel_j(gamma, z);
        return z * bj * bj * ft_closed(z, params).value;
    };
    QuadratureConfig qc = cfg;
    qc.rel_tol = std::min(cfg.rel_tol, 1e-11);
    EvalResult q = integrate(f, 0.0, r, qc);
    double scale = std::pow(2.0 * kPi, 0.5 * params.d);
    q.value *= scale;
    q.abs_error_estimate *= scale;
    return q;
}

double coeff_asymptotic(std::int64_t m, const WendlandParams& params) {
    params.require_sphere();
    if (m < 1) throw DomainError("coeff_asymptotic: requires m >= 1");
    double mbar = static_cast<double>(m) + 0.5 * (params.d - 1);
    double lam = params.lambda;
    double logv = 0.5 * (params.d - 1) * std::log(2.0 * kPi) + (lam - 0.5) * std::log(2.0) +
                  log_gamma(lam - 0.5).log_abs + std::log(params.mu) +
                  (2.0 * params.alpha + 1.0) * std::log(params.epsilon) - std::log(kSqrt2Pi) -
                  (2.0 * lam - 1.0) * std::log(mbar);
    return std::exp(logv);
}

double kappa_constant(const WendlandParams& params, int dim) {
    double a = 0.5 * (dim + 1) + params.alpha;
    return std::exp(a * std::log(2.0) + log_gamma(a).log_abs) * params.mu *
           std::pow(params.epsilon, 2.0 * params.alpha + 1.0) / kSqrt2Pi;
}

double asymptotic_3f2(std::int64_t m, const WendlandParams& params, bool with_oscillatory) {
    params.require_sphere();
    if (params.d % 2 == 0)
        throw DomainError(
            "asymptotic_3f2: oscillatory expansion is established for odd d only");
    if (m < 1) throw DomainError("asymptotic_3f2: requires m >= 1");
    const double lam = params.lambda;
    const double mu = params.mu;
    const double eps = params.epsilon;
    const double mbar = static_cast<double>(m) + 0.5 * (params.d - 1);

    double lead = std::exp(log_gamma(2.0 * lam + mu - 1.0).log_abs +
                           (2.0 * lam - 1.0) * std::log(eps) - log_gamma(mu).log_abs -
                           (2.0 * lam - 1.0) * std::log(mbar));
    if (!with_oscillatory) return lead;

    const double b1 = lam + 0.5 * (mu - 1.0);
    const double b2 = lam + 0.5 * mu;
    double second = 0.0;
    if (eps > 0.5) {
        double theta = 2.0 * std::asin(1.0 / (2.0 * eps));
        double log_c = log_gamma(b1).log_abs + log_gamma(b2).log_abs + std::log(2.0 * eps) +
                       0.5 * (lam + mu - 1.5) * std::log(4.0 * eps * eps - 1.0) -
                       0.5 * std::log(kPi) - log_gamma(lam - 0.5).log_abs -
                       (lam + mu - 0.5) * std::log(mbar);
        double phase = (static_cast<double>(m) + 0.5 * (params.d - 2)) * theta -
                       0.5 * kPi * (lam + mu - 0.5);
        second = std::exp(log_c) * std::cos(phase);
    } else {
        // epsilon = 1/2: parity-alternating algebraic correction; the
        // reciprocal Gamma factor vanishes when 2 - lambda - mu hits a pole
        double pole_arg = 2.0 - lam - mu;
        if (!(near_integer(pole_arg) && std::round(pole_arg) <= 0.0)) {
            double top_arg = mbar - 2.0 * (lam + mu - 1.0);
            if (top_arg > 0.0 || !near_integer(top_arg)) {
                LogSigned top = log_gamma(top_arg);
                LogSigned rec = log_gamma(pole_arg);
                std::int64_t n = std::llround(static_cast<double>(m) + 0.5 * (params.d - 3));
                double parity = (n % 2 == 0) ? 1.0 : -1.0;
                double bracket = 1.0 - 2.0 * (1.0 - lam - mu) * (1.0 - lam - mu) / mbar;
                second = parity * top.sign * rec.sign *
                         std::exp(log_gamma(b1).log_abs + log_gamma(b2).log_abs + top.log_abs -
                                  rec.log_abs - log_gamma(lam - 0.5).log_abs -
                                  log_gamma(mbar).log_abs) *
                         bracket;
            }
        }
    }
    return lead + second;
}

std::int64_t n_mdim(std::int64_t m, int d) {
    if (d < 2) throw DomainError("n_mdim: requires d >= 2");
    if (m < 0) throw DomainError("n_mdim: requires m >= 0");
    if (m == 0) return 1;
    // (2m+d-2)/m * binom(m+d-3, d-2)
    long double b = 1.0L;
    for (int i = 1; i <= d - 2; ++i)
        b *= static_cast<long double>(m - 1 + i) / static_cast<long double>(i);
    long double v = b * static_cast<long double>(2 * m + d - 2) / static_cast<long double>(m);
    if (v > 9.0e18L) throw NumericalError("n_mdim: overflow");
    return static_cast<std::int64_t>(std::llroundl(v));
}

double sphere_surface(int k) {
    if (k < 0) throw DomainError("sphere_surface: requires k >= 0");
    return 2.0 * std::pow(kPi, 0.5 * (k + 1)) /
           std::exp(log_gamma(0.5 * (k + 1)).log_abs);
}

SchoenbergTable build_schoenberg_table(const WendlandParams& params, std::int64_t max_degree,
                                       const QuadratureConfig& cfg) {
    params.require_sphere();
    if (max_degree < 0) throw DomainError("build_schoenberg_table: max_degree < 0");
    SchoenbergTable table{params, max_degree, schoenberg_prefactor(params), {}};
    table.coeffs.reserve(max_degree + 1);
    for (std::int64_t m = 0; m <= max_degree; ++m)
        table.coeffs.push_back(coeff_closed(m, params, cfg));
    return table;
}

EvalResult reconstruct_kernel(double t, const SchoenbergTable& table) {
    if (t < -1.0 || t > 1.0) throw DomainError("reconstruct_kernel: t outside [-1, 1]");
    const WendlandParams& p = table.params;
    const double lam_g = 0.5 * (p.d - 2);
    const double omega = sphere_surface(p.d - 1);

    double sum = 0.0, comp = 0.0;
    for (std::int64_t m = 0; m <= table.max_degree; ++m) {
        double term = table.coeffs[m].value * static_cast<double>(n_mdim(m, p.d)) / omega *
                      gegenbauer_normalized(m, lam_g, t);
        double y = term - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }

    // truncation tail from the asymptotic decay; |G_m| <= 1 and the summand
    // behaves like k^{-(2 alpha + 2)}, so bound the tail by its power-law
    // integral extrapolation from the first omitted degree
    std::int64_t k0 = table.max_degree + 1;
    double t0 = coeff_asymptotic(k0, p) * static_cast<double>(n_mdim(k0, p.d)) / omega;
    double tail = t0 * (1.0 + static_cast<double>(k0) / (2.0 * p.alpha + 1.0));

    return {sum, tail, Method::PlainSum, table.max_degree + 1, 1.0, false};
}

std::pair<double, double> sobolev_bounds_sphere(const SchoenbergTable& table) {
    const WendlandParams& p = table.params;
    if (!(p.mu >= p.lambda))
        throw DomainError("sobolev_bounds_sphere: requires mu >= lambda");
    double c1 = std::numeric_limits<double>::max();
    double c2 = 0.0;
    const double scale = std::pow(p.epsilon, 2.0 * p.alpha + 1.0);
    for (std::int64_t m = 0; m <= table.max_degree; ++m) {
        double v = table.coeffs[m].value;
        if (v <= 0.0)
            throw NumericalError("sobolev_bounds_sphere: nonpositive coefficient encountered");
        double md = static_cast<double>(m);
        double ratio = v * std::pow(1.0 + md * md, p.lambda - 0.5) / scale;
        c1 = std::min(c1, ratio);
        c2 = std::max(c2, ratio);
    }
    return {c1, c2};
}

}  // namespace gwf
