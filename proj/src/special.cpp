#include "gwf/special.hpp"

#include <cmath>
#include <limits>

#include "gwf/double_double.hpp"
#include "gwf/errors.hpp"

namespace gwf {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLnSqrt2Pi = 0.91893853320467274178032973640561764;

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey). ~15 digits on the
// positive axis.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// log Gamma(x) for x > 0.
double log_gamma_positive(double x) {
    double sum = kLanczos[0];
    for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (x + k - 1);
    double t = x + kLanczosG - 0.5;
    return kLnSqrt2Pi + (x - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

double LogSigned::to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
}

bool near_integer(double x, double tol) {
    return std::fabs(x - std::round(x)) <= tol;
}

LogSigned log_gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("log_gamma: non-finite argument");
    if (x > 0.0) return {log_gamma_positive(x), +1};
    if (near_integer(x, 0.0) || (x <= 0.0 && x == std::floor(x)))
        throw PoleError("log_gamma: pole at non-positive integer");
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    // sin(pi x) via the reduced argument for accuracy at large |x|.
    double fl = std::floor(x);
    double frac = x - fl;  // in (0,1)
    double sin_pix = std::sin(kPi * frac);
    // sign of sin(pi x): sign flips with parity of floor(x)
    int parity = (static_cast<std::int64_t>(fl) % 2 + 2) % 2;
    int sign_sin = (parity == 0) ? +1 : -1;
    double log_abs = std::log(kPi) - std::log(std::fabs(sin_pix)) - log_gamma_positive(1.0 - x);
    return {log_abs, sign_sin};
}

double gamma_fn(double x) {
    LogSigned ls = log_gamma(x);
    return ls.to_double();
}

double pochhammer(double c, std::int64_t n) {
    if (n < 0) throw DomainError("pochhammer: negative n");
    double p = 1.0;
    for (std::int64_t k = 0; k < n; ++k) p *= (c + static_cast<double>(k));
    return p;
}

LogSigned pochhammer_log(double c, std::int64_t n) {
    if (n < 0) throw DomainError("pochhammer: negative n");
    double log_abs = 0.0;
    int sign = 1;
    for (std::int64_t k = 0; k < n; ++k) {
        double f = c + static_cast<double>(k);
        if (f == 0.0) return {0.0, 0};
        if (f < 0.0) sign = -sign;
        log_abs += std::log(std::fabs(f));
    }
    return {log_abs, sign};
}

namespace {

// Power series J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k).
// Compensated summation; escalates to double-double if cancellation bites.
// Returns only the sum; prefactor applied by the callers.
double bessel_series_sum(double nu, double x) {
    double q = -0.25 * x * x;
    // plain pass with Kahan
    double sum = 1.0, comp = 0.0, term = 1.0, max_abs = 1.0;
    int k = 1;
    for (; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * (nu + k));
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(sum) > max_abs) max_abs = std::fabs(sum);
        if (std::fabs(term) < 1e-18 * std::max(std::fabs(sum), 1e-300)) break;
    }
    double cancel = (sum != 0.0) ? max_abs / std::fabs(sum) : 1e300;
    if (cancel > 1e3) {  // cheap insurance: quadrature targets need ~1e-13 J values
        // double-double pass; the term ratio must also be double-double, or
        // its rounding reintroduces ~1e-16 * max_term noise into the sum
        DoubleDouble qd = DoubleDouble(x) * DoubleDouble(x) * (-0.25);
        DoubleDouble s(1.0), t(1.0);
        for (int j = 1; j <= k + 4; ++j) {
            double jd = static_cast<double>(j);
            t = t * qd / (DoubleDouble(jd) * (DoubleDouble(nu) + jd));
            s = s + t;
        }
        sum = static_cast<double>(s);
        if (cancel > 1e26)
            throw PrecisionExhaustedError("bessel_j: series cancellation beyond budget");
    }
    return sum;
}

double bessel_series(double nu, double x) {
    double log_pref = nu * std::log(0.5 * x) - log_gamma(nu + 1.0).log_abs;
    return std::exp(log_pref) * bessel_series_sum(nu, x);
}

// Hankel asymptotic expansion of J_nu for large x (|nu| small).
double bessel_hankel(double nu, double x) {
    double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    // P ~ sum of even terms, Q ~ sum of odd terms of the 8x expansion
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 40; ++k) {
        double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= num / (k * 8.0 * x);
        if (std::fabs(term) > prev) break;  // asymptotic tail started growing
        prev = std::fabs(term);
        if (k % 4 == 1) q += term;
        else if (k % 4 == 2) p -= term;
        else if (k % 4 == 3) q -= term;
        else p += term;
        if (std::fabs(term) < 1e-18) break;
    }
    double omega = x - (0.5 * nu + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(omega) - q * std::sin(omega));
}

}  // namespace

double bessel_j(double nu, double x) {
    if (x < 0.0) throw DomainError("bessel_j: x < 0");
    if (nu < -0.5) throw DomainError("bessel_j: order below -1/2");
    if (x == 0.0) return (nu == 0.0) ? 1.0 : 0.0;
    if (x <= 30.0) return bessel_series(nu, x);
    if (nu <= 1.0) return bessel_hankel(nu, x);
    // Reduce to the fractional order and recur upward; stable while nu < x.
    double nu0 = nu - std::floor(nu);
    if (nu >= 0.9 * x) {
        // series still converges; cancellation ~ e^x is fine up to x ~ 55
        if (x < 55.0) return bessel_series(nu, x);
        throw PrecisionExhaustedError("bessel_j: order too close to argument for stable evaluation");
    }
    double jm = bessel_hankel(nu0, x);
    double j = bessel_hankel(nu0 + 1.0, x);
    double v = nu0 + 1.0;
    while (v < nu - 0.5) {
        double jn = (2.0 * v / x) * j - jm;
        jm = j;
        j = jn;
        v += 1.0;
    }
    return j;
}

double bessel_j_scaled(double nu, double x) {
    if (x < 0.0) throw DomainError("bessel_j_scaled: x < 0");
    if (nu < -0.5) throw DomainError("bessel_j_scaled: order below -1/2");
    double log_pref = -nu * std::log(2.0) - log_gamma(nu + 1.0).log_abs;
    if (x == 0.0) return std::exp(log_pref);
    if (x <= 30.0) return std::exp(log_pref) * bessel_series_sum(nu, x);
    return bessel_j(nu, x) * std::exp(-nu * std::log(x));
}

double gegenbauer(std::int64_t m, double lambda, double t) {
    if (m < 0) throw DomainError("gegenbauer: negative degree");
    if (lambda == 0.0) return gegenbauer_normalized(m, 0.0, t);
    if (m == 0) return 1.0;
    double cm1 = 1.0;
    double c = 2.0 * lambda * t;
    for (std::int64_t k = 1; k < m; ++k) {
        double cn = (2.0 * (k + lambda) * t * c - (k + 2.0 * lambda - 1.0) * cm1) / (k + 1.0);
        cm1 = c;
        c = cn;
    }
    return c;
}

double gegenbauer_normalized(std::int64_t m, double lambda, double t) {
    if (m < 0) throw DomainError("gegenbauer: negative degree");
    if (lambda == 0.0) {
        double tc = std::min(1.0, std::max(-1.0, t));
        return std::cos(static_cast<double>(m) * std::acos(tc));
    }
    // run value and C_m(1) = (2 lambda)_m / m! side by side to avoid overflow
    double v = gegenbauer(m, lambda, t);
    double at1 = 1.0;
    for (std::int64_t k = 0; k < m; ++k)
        at1 *= (2.0 * lambda + k) / (k + 1.0);
    return v / at1;
}

}  // namespace gwf
