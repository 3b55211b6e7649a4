#include "gwf/pfq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gwf/double_double.hpp"
#include "gwf/errors.hpp"
#include "gwf/special.hpp"

namespace gwf {

namespace {

constexpr double kIntTol = 1e-12;

double param_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

// term_{j+1} / term_j
double term_ratio(const HyperSeries& s, std::int64_t j) {
    double r = s.argument / (static_cast<double>(j) + 1.0);
    for (double a : s.numerators) r *= (a + static_cast<double>(j));
    for (double b : s.denominators) r /= (b + static_cast<double>(j));
    return r;
}

struct PlainPass {
    double sum = 0.0;
    double max_partial = 0.0;
    double last_term = 0.0;
    std::int64_t terms = 0;
    bool overflowed = false;
    bool converged = false;
    std::vector<double> partials;  // only recorded when requested
};

PlainPass plain_sum(const HyperSeries& s, const SummationPolicy& policy, bool record_partials) {
    PlainPass out;
    double sum = 1.0, comp = 0.0, term = 1.0;
    out.max_partial = 1.0;
    std::int64_t limit = s.terminating ? s.termination_index : policy.max_terms;
    int small_streak = 0;
    if (record_partials) out.partials.push_back(sum);
    std::int64_t j = 0;
    for (; j < limit; ++j) {
        term *= term_ratio(s, j);
        if (!std::isfinite(term) || std::fabs(term) > 1e290) {
            out.overflowed = true;
            break;
        }
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        out.max_partial = std::max(out.max_partial, std::fabs(sum));
        if (record_partials) out.partials.push_back(sum);
        if (!s.terminating) {
            if (std::fabs(term) < policy.stop_rel * std::max(std::fabs(sum), 1e-300)) {
                if (++small_streak >= 3) {
                    out.converged = true;
                    break;
                }
            } else {
                small_streak = 0;
            }
        }
    }
    if (s.terminating && !out.overflowed) out.converged = true;
    out.sum = sum;
    out.last_term = term;
    out.terms = std::min(j, limit) + 1;
    return out;
}

// Sign-tracked log-domain summation with a dynamically rescaled accumulator.
// Accumulator is either double (Kahan) or DoubleDouble.
template <typename Acc>
struct ScaledSummer {
    Acc sum{};
    double scale_log = 0.0;  // running value = sum * exp(scale_log)
    double log_max_partial = -std::numeric_limits<double>::infinity();

    void add(double log_term, int sign) {
        if (sign == 0) return;
        if (log_term > scale_log + 300.0) {
            // rescale down before the new term dwarfs the accumulator
            double shift = log_term - scale_log;
            sum = sum * std::exp(-shift);
            scale_log = log_term;
        }
        sum = sum + sign * std::exp(log_term - scale_log);
        double a = std::fabs(static_cast<double>(sum));
        if (a > 0.0)
            log_max_partial = std::max(log_max_partial, std::log(a) + scale_log);
    }

    double log_abs() const {
        double a = std::fabs(static_cast<double>(sum));
        return (a > 0.0) ? std::log(a) + scale_log
                         : -std::numeric_limits<double>::infinity();
    }
};

struct LogPassResult {
    double value = 0.0;
    double log_max_partial = 0.0;
    double log_abs_value = 0.0;
    std::int64_t terms = 0;
    double last_term_log = -std::numeric_limits<double>::infinity();
};

template <typename Acc>
LogPassResult log_domain_sum(const HyperSeries& s, const SummationPolicy& policy) {
    ScaledSummer<Acc> acc;
    double log_term = 0.0;
    int sign = 1;
    acc.add(0.0, 1);
    std::int64_t limit = s.terminating ? s.termination_index : policy.max_terms;
    int small_streak = 0;
    std::int64_t j = 0;
    for (; j < limit; ++j) {
        double jd = static_cast<double>(j);
        log_term += std::log(std::fabs(s.argument)) - std::log(jd + 1.0);
        if (s.argument < 0.0) sign = -sign;
        bool zero = false;
        for (double a : s.numerators) {
            double f = a + jd;
            if (f == 0.0) { zero = true; break; }
            if (f < 0.0) sign = -sign;
            log_term += std::log(std::fabs(f));
        }
        if (zero) break;  // all further terms vanish
        for (double b : s.denominators) {
            double f = b + jd;
            if (f < 0.0) sign = -sign;
            log_term -= std::log(std::fabs(f));
        }
        acc.add(log_term, sign);
        if (!s.terminating) {
            if (log_term < std::log(policy.stop_rel) + acc.log_abs()) {
                if (++small_streak >= 3) break;
            } else {
                small_streak = 0;
            }
        }
    }
    LogPassResult out;
    out.log_abs_value = acc.log_abs();
    out.log_max_partial = acc.log_max_partial;
    out.terms = j + 1;
    out.last_term_log = log_term;
    double v = static_cast<double>(acc.sum);
    if (out.log_abs_value > 700.0)
        throw NumericalError("eval_pfq: result overflows double precision");
    out.value = v * std::exp(acc.scale_log);
    return out;
}

// Extended-precision pass: the term recurrence and the accumulator are both
// double-double, with exact power-of-two rescaling so intermediate terms may
// exceed the double range. Unlike the log-domain pass (whose terms carry the
// ~1e-14 relative noise of exponentiated log sums), term accuracy here is
// ~1e-31, so cancellation up to the 1e26 budget is genuinely recoverable.
struct ExtPass {
    double value = 0.0;
    double log_max_partial = -std::numeric_limits<double>::infinity();
    double log_abs_value = -std::numeric_limits<double>::infinity();
    std::int64_t terms = 0;
    double last_term_log = -std::numeric_limits<double>::infinity();
};

ExtPass dd_term_sum(const HyperSeries& s, const SummationPolicy& policy) {
    constexpr double kLn2 = 0.69314718055994530941723212145817657;
    DoubleDouble term(1.0), sum(1.0);
    std::int64_t e_term = 0, e_sum = 0;  // value = x * 2^e

    auto normalize = [](DoubleDouble& x, std::int64_t& e) {
        double a = std::fabs(x.hi);
        while (a > 0.0 && a > 1.486e150) {  // 2^499
            x.hi = std::ldexp(x.hi, -512);
            x.lo = std::ldexp(x.lo, -512);
            e += 512;
            a = std::fabs(x.hi);
        }
        while (a > 0.0 && a < 6.73e-151) {  // 2^-499
            x.hi = std::ldexp(x.hi, 512);
            x.lo = std::ldexp(x.lo, 512);
            e -= 512;
            a = std::fabs(x.hi);
        }
    };
    auto log_of = [](const DoubleDouble& x, std::int64_t e) {
        double a = std::fabs(static_cast<double>(x));
        return (a > 0.0) ? std::log(a) + static_cast<double>(e) * kLn2
                         : -std::numeric_limits<double>::infinity();
    };

    ExtPass out;
    out.log_max_partial = 0.0;
    std::int64_t limit = s.terminating ? s.termination_index : policy.max_terms;
    int small_streak = 0;
    std::int64_t j = 0;
    for (; j < limit; ++j) {
        double jd = static_cast<double>(j);
        term = term * DoubleDouble(s.argument);
        for (double a : s.numerators) term = term * (DoubleDouble(a) + DoubleDouble(jd));
        for (double b : s.denominators) term = term / (DoubleDouble(b) + DoubleDouble(jd));
        term = term / DoubleDouble(jd + 1.0);
        normalize(term, e_term);
        if (term.hi == 0.0) break;  // exact termination

        std::int64_t shift = e_term - e_sum;
        if (shift > 0) {
            // bring the accumulator up to the term's scale (underflow of the
            // old accumulator just means it is negligible at the new scale)
            int down = static_cast<int>(std::min<std::int64_t>(shift, 4000));
            sum.hi = std::ldexp(sum.hi, -down);
            sum.lo = std::ldexp(sum.lo, -down);
            e_sum = e_term;
            shift = 0;
        }
        if (shift >= -1060) {
            DoubleDouble t = term;
            t.hi = std::ldexp(t.hi, static_cast<int>(shift));
            t.lo = std::ldexp(t.lo, static_cast<int>(shift));
            sum = sum + t;
        }
        normalize(sum, e_sum);
        out.log_max_partial = std::max(out.log_max_partial, log_of(sum, e_sum));

        double log_term = log_of(term, e_term);
        out.last_term_log = log_term;
        if (!s.terminating) {
            if (log_term < std::log(policy.stop_rel) + log_of(sum, e_sum)) {
                if (++small_streak >= 3) break;
            } else {
                small_streak = 0;
            }
        }
    }
    out.terms = j + 1;
    out.log_abs_value = log_of(sum, e_sum);
    if (out.log_abs_value > 700.0)
        throw NumericalError("eval_pfq: result overflows double precision");
    out.value = std::ldexp(sum.hi, static_cast<int>(e_sum)) +
                std::ldexp(sum.lo, static_cast<int>(e_sum));
    return out;
}

// One sweep of Aitken delta-squared on a sequence of partial sums.
std::vector<double> aitken_sweep(const std::vector<double>& p) {
    std::vector<double> out;
    if (p.size() < 3) return out;
    out.reserve(p.size() - 2);
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
        double d2 = p[i + 2] - 2.0 * p[i + 1] + p[i];
        if (d2 == 0.0) out.push_back(p[i + 2]);
        else out.push_back(p[i + 2] - (p[i + 2] - p[i + 1]) * (p[i + 2] - p[i + 1]) / d2);
    }
    return out;
}

}  // namespace

HyperSeries::HyperSeries(std::vector<double> a, std::vector<double> b, double z)
    : numerators(std::move(a)), denominators(std::move(b)), argument(z) {
    for (double d : denominators) {
        if (d <= 0.5 && near_integer(d, kIntTol) && std::round(d) <= 0.0)
            throw PoleError("HyperSeries: denominator parameter is a non-positive integer");
    }
    std::int64_t best = -1;
    for (double n : numerators) {
        if (n <= 0.5 && near_integer(n, kIntTol) && std::round(n) <= 0.0) {
            std::int64_t idx = static_cast<std::int64_t>(std::llround(-n));
            if (best < 0 || idx < best) best = idx;
        }
    }
    if (best >= 0) {
        terminating = true;
        termination_index = best;
        // snap the terminating parameters so the product cuts off exactly
        for (double& n : numerators)
            if (near_integer(n, kIntTol) && std::round(n) <= 0.0) n = std::round(n);
    }
}

EvalResult eval_pfq(const HyperSeries& series, const SummationPolicy& policy) {
    const std::size_t p = series.numerators.size();
    const std::size_t q = series.denominators.size();
    const double z = series.argument;

    if (!series.terminating) {
        if (p > q + 1)
            throw DivergenceError("eval_pfq: p > q+1 series diverges for z != 0");
        if (p == q + 1) {
            double margin = param_sum(series.denominators) - param_sum(series.numerators);
            if (std::fabs(z) > 1.0 + 1e-14 || (std::fabs(std::fabs(z) - 1.0) <= 1e-14 && margin <= 0.0))
                throw DivergenceError("eval_pfq: outside the convergence domain for p = q+1");
        }
    }
    if (series.terminating && series.termination_index == 0) {
        return {1.0, 0.0, Method::PlainSum, 1, 1.0, false};
    }
    if (z == 0.0) {
        return {1.0, 0.0, Method::PlainSum, 1, 1.0, false};
    }

    const bool slow_tail = !series.terminating && p == q + 1 && std::fabs(z) > 0.9;
    const bool record = slow_tail && policy.allow_acceleration &&
                        policy.force == ForcedMethod::Auto;

    if (policy.force == ForcedMethod::PlainSum) {
        PlainPass pp = plain_sum(series, policy, false);
        if (pp.overflowed) throw NumericalError("eval_pfq: plain-sum overflow");
        double cancel = (pp.sum != 0.0) ? std::max(1.0, pp.max_partial / std::fabs(pp.sum)) : 1.0;
        double err = 2.2e-16 * pp.max_partial + (series.terminating ? 0.0 : std::fabs(pp.last_term));
        return {pp.sum, err, Method::PlainSum, pp.terms, cancel, false};
    }
    if (policy.force == ForcedMethod::LogDomainSigned) {
        LogPassResult lp = log_domain_sum<double>(series, policy);
        double cancel = std::max(1.0, std::exp(lp.log_max_partial - lp.log_abs_value));
        // exponentiated log terms carry ~1e-14 relative noise each
        double err = 1.0e-14 * std::exp(lp.log_max_partial);
        return {lp.value, err, Method::LogDomainSigned, lp.terms, cancel, false};
    }
    if (policy.force == ForcedMethod::ExtendedPrecision) {
        ExtPass xp = dd_term_sum(series, policy);
        double cancel = std::max(1.0, std::exp(xp.log_max_partial - xp.log_abs_value));
        double err = 1.0e-31 * std::exp(xp.log_max_partial);
        return {xp.value, err, Method::ExtendedPrecision, xp.terms, cancel, false};
    }

    PlainPass pp = plain_sum(series, policy, record);
    double cancel = 0.0;
    if (!pp.overflowed && pp.sum != 0.0) cancel = pp.max_partial / std::fabs(pp.sum);

    if (!pp.overflowed && cancel <= policy.escalate_cancellation && (pp.converged || !record)) {
        if (!pp.converged && !series.terminating && !slow_tail)
            throw NumericalError("eval_pfq: series failed to converge within max_terms");
        double tail = series.terminating ? 0.0 : std::fabs(pp.last_term);
        double err = 2.2e-16 * cancel * std::max(std::fabs(pp.sum), 1e-300) + tail;
        return {pp.sum, err, Method::PlainSum, pp.terms, std::max(1.0, cancel), false};
    }

    if (record && !pp.converged && !pp.overflowed && cancel <= policy.escalate_cancellation) {
        // slowly converging p = q+1 tail near |z| = 1: iterated Aitken
        std::vector<double> seq(pp.partials.end() - std::min<std::size_t>(pp.partials.size(), 64),
                                pp.partials.end());
        double prev = seq.back();
        for (int sweep = 0; sweep < 4 && seq.size() >= 3; ++sweep) {
            seq = aitken_sweep(seq);
            if (!seq.empty()) prev = seq.back();
        }
        double err = std::fabs(prev - pp.partials.back()) * 1e-2 + 2.2e-16 * cancel * std::fabs(prev);
        return {prev, err, Method::PlainSum, pp.terms, std::max(1.0, cancel), false};
    }

    // escalate: log-domain-signed in plain doubles first
    LogPassResult lp = log_domain_sum<double>(series, policy);
    double log_cancel = lp.log_max_partial - lp.log_abs_value;
    if (log_cancel <= std::log(policy.escalate_cancellation) && lp.log_max_partial > 650.0) {
        // plain pass overflowed but cancellation is modest: the log-domain
        // value (noise ~1e-14 * max partial) is the best cheap answer
        double cr = std::max(1.0, std::exp(log_cancel));
        double err = 1.0e-14 * std::exp(lp.log_max_partial) +
                     (series.terminating ? 0.0 : std::exp(lp.last_term_log));
        return {lp.value, err, Method::LogDomainSigned, lp.terms, cr, false};
    }
    if (log_cancel > std::log(policy.exhausted_cancellation))
        throw PrecisionExhaustedError("eval_pfq: cancellation exceeds the extended-precision budget");

    ExtPass xp = dd_term_sum(series, policy);
    double xc = xp.log_max_partial - xp.log_abs_value;
    if (xc > std::log(policy.exhausted_cancellation))
        throw PrecisionExhaustedError("eval_pfq: cancellation exceeds the extended-precision budget");
    double cr = std::max(1.0, std::exp(xc));
    double err = 1.0e-31 * std::exp(xp.log_max_partial) +
                 (series.terminating ? 0.0 : std::exp(xp.last_term_log));
    return {xp.value, err, Method::ExtendedPrecision, xp.terms, cr, false};
}

}  // namespace gwf
