#pragma once

#include <cmath>

namespace gwf {

// Double-word ("double-double") arithmetic, ~32 significant digits.
// Error-free transformations follow Dekker / Knuth.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    DoubleDouble() = default;
    DoubleDouble(double h) : hi(h), lo(0.0) {}
    DoubleDouble(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace detail {

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

}  // namespace detail

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
    double e1, e2;
    double s = detail::two_sum(a.hi, b.hi, e1);
    double t = detail::two_sum(a.lo, b.lo, e2);
    e1 += t;
    s = detail::quick_two_sum(s, e1, e1);
    e1 += e2;
    s = detail::quick_two_sum(s, e1, e1);
    return {s, e1};
}

inline DoubleDouble operator+(DoubleDouble a, double b) {
    double e;
    double s = detail::two_sum(a.hi, b, e);
    e += a.lo;
    s = detail::quick_two_sum(s, e, e);
    return {s, e};
}

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }
inline DoubleDouble operator-(DoubleDouble a, double b) { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
    double e;
    double p = detail::two_prod(a.hi, b.hi, e);
    e += a.hi * b.lo + a.lo * b.hi;
    p = detail::quick_two_sum(p, e, e);
    return {p, e};
}

inline DoubleDouble operator*(DoubleDouble a, double b) {
    double e;
    double p = detail::two_prod(a.hi, b, e);
    e += a.lo * b;
    p = detail::quick_two_sum(p, e, e);
    return {p, e};
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
    double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    double e;
    double q = detail::quick_two_sum(q1, q2, e);
    DoubleDouble res{q, e};
    return res + q3;
}

inline DoubleDouble operator/(DoubleDouble a, double b) { return a / DoubleDouble(b); }

inline double abs_value(DoubleDouble a) { return std::fabs(a.hi + a.lo); }

}  // namespace gwf
