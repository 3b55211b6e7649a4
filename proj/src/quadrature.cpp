#include "gwf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "gwf/errors.hpp"

namespace gwf {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK QK15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double integral;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    for (int i = 0; i < 15; ++i) {
        if (!std::isfinite(fv[i]))
            throw QuadratureError("integrate: integrand returned a non-finite value");
    }
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
    resk += kWgk[7] * fv[7];
    // Gauss nodes are the odd-indexed Kronrod nodes
    resg = kWg[3] * fv[7];
    for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    double integral = resk * h;
    double err = std::fabs((resk - resg) * h);
    // QUADPACK-style sharpening of the nested-rule difference
    double resabs = 0.0;
    for (int i = 0; i < 7; ++i) resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
    resabs += kWgk[7] * std::fabs(fv[7]);
    resabs *= std::fabs(h);
    if (resabs > 0.0 && err > 0.0) {
        double r = std::pow(200.0 * err / resabs, 1.5);
        err = resabs * std::min(1.0, r);
    }
    return {a, b, integral, std::max(err, 1e-300)};
}

}  // namespace

void QuadratureConfig::validate() const {
    if (rel_tol <= 0.0 || abs_tol <= 0.0 || osc_cycle_tol <= 0.0)
        throw DomainError("QuadratureConfig: tolerances must be positive");
    if (max_subdivisions < 1)
        throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
}

EvalResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw DomainError("integrate: requires a < b");

    std::priority_queue<Panel> heap;
    heap.push(gk15(f, a, b));
    double total = heap.top().integral;
    double total_err = heap.top().error;
    std::int64_t nodes = 15;
    std::int64_t splits = 0;

    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
        if (splits >= cfg.max_subdivisions)
            throw QuadratureError("integrate: subdivision limit reached");
        Panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadratureError("integrate: interval too small to subdivide");
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        nodes += 30;
        ++splits;
    }
    return {total, total_err, Method::Quadrature, nodes, 1.0, false};
}

EvalResult integrate_oscillatory(const Integrand& f, double a, double zero_spacing,
                                 const QuadratureConfig& cfg) {
    cfg.validate();
    if (zero_spacing <= 0.0) throw DomainError("integrate_oscillatory: zero_spacing <= 0");
    const double p = cfg.tail_exponent_hint;

    QuadratureConfig cyc = cfg;
    cyc.max_subdivisions = 200;

    std::vector<double> cycle_sums;
    std::vector<double> partials;
    double total = 0.0;
    double quad_err = 0.0;
    std::int64_t nodes = 0;
    const std::int64_t max_cycles = 100000;

    double lo = a;
    double shrink_watch = std::numeric_limits<double>::max();
    int non_decaying = 0;
    std::int64_t k = 0;
    bool alternating = true;
    for (; k < max_cycles; ++k) {
        double hi = lo + zero_spacing;
        cyc.abs_tol = std::max(1e-300, cfg.osc_cycle_tol * 1e-4 * std::max(std::fabs(total), 1.0e-30));
        cyc.rel_tol = std::max(1e-13, 1e-2 * cfg.osc_cycle_tol);
        EvalResult r = integrate(f, lo, hi, cyc);
        cycle_sums.push_back(r.value);
        total += r.value;
        partials.push_back(total);
        quad_err += r.abs_error_estimate;
        nodes += r.terms_or_nodes;
        lo = hi;

        if (cycle_sums.size() >= 2 && cycle_sums.back() * cycle_sums[cycle_sums.size() - 2] > 0.0)
            alternating = false;

        double amp = std::fabs(r.value);
        if (k >= 5) {
            if (amp >= shrink_watch) {
                if (++non_decaying >= 50)
                    throw DivergenceError(
                        "integrate_oscillatory: cycle sums failed to shrink over 50 cycles");
            } else {
                non_decaying = 0;
                shrink_watch = amp;
            }
        } else {
            shrink_watch = std::min(shrink_watch, std::max(amp, 1e-300));
        }

        // estimated remainder: alternating tails are bounded by the next
        // cycle; same-sign power-law tails by the integral extrapolation
        double remainder;
        if (alternating) remainder = amp;
        else if (p > 1.0) remainder = amp * (hi / zero_spacing) / (p - 1.0);
        else remainder = std::numeric_limits<double>::infinity();
        if (k >= 3 && remainder < cfg.osc_cycle_tol * std::max(std::fabs(total), 1e-300)) {
            ++k;
            break;
        }
    }

    double value = total;
    if (alternating && partials.size() >= 4) {
        // one Aitken sweep over the trailing partial sums
        std::size_t n = partials.size();
        double d2 = partials[n - 1] - 2.0 * partials[n - 2] + partials[n - 3];
        if (d2 != 0.0) {
            double acc = partials[n - 1] -
                         (partials[n - 1] - partials[n - 2]) * (partials[n - 1] - partials[n - 2]) / d2;
            quad_err += std::fabs(acc - value);
            value = acc;
        }
    }

    // analytic tail from the x^-p envelope; for same-sign cycle sums the
    // power-law extrapolation is accurate to O(1/k) and is folded into the
    // value, for alternating ones it only bounds the error
    double tail_err = 0.0;
    if (!cycle_sums.empty() && p > 1.0) {
        // last cycle covered [lo - spacing, lo]; treat its sum as the envelope
        // integral over that cycle, centered at lo - spacing/2 (midpoint rule,
        // second-order accurate in spacing/lo)
        double half = 0.5 * zero_spacing / lo;
        double ext = cycle_sums.back() * (lo / zero_spacing) / (p - 1.0) *
                     std::pow(1.0 - half, p);
        if (!alternating) {
            value += ext;
            double kk = static_cast<double>(std::max<std::int64_t>(k, 1));
            tail_err = std::fabs(ext) * (0.25 * p * p / (kk * kk) + 0.02);
        } else {
            tail_err = std::fabs(ext);
        }
    }
    return {value, quad_err + tail_err, Method::Quadrature, nodes, 1.0, false};
}

}  // namespace gwf
