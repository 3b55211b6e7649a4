#pragma once

#include <cstdint>
#include <vector>

#include "gwf/eval_result.hpp"

namespace gwf {

// A pFq specification: numerator/denominator parameter lists and the
// argument. Construction validates the denominators and detects
// terminating series (a numerator within 1e-12 of a non-positive integer).
struct HyperSeries {
    std::vector<double> numerators;
    std::vector<double> denominators;
    double argument = 0.0;

    bool terminating = false;
    std::int64_t termination_index = -1;  // series has termination_index+1 terms

    HyperSeries(std::vector<double> a, std::vector<double> b, double z);
};

enum class ForcedMethod {
    Auto,
    PlainSum,
    LogDomainSigned,
    ExtendedPrecision,
};

struct SummationPolicy {
    // non-terminating stop rule: three consecutive terms below
    // stop_rel * |partial sum|
    double stop_rel = 1e-17;
    std::int64_t max_terms = 100000;
    double escalate_cancellation = 1e10;   // plain -> extended precision
    double exhausted_cancellation = 1e26;  // extended precision budget
    ForcedMethod force = ForcedMethod::Auto;
    // Iterated Aitken acceleration for slowly converging p = q+1 series
    // with |z| near 1.
    bool allow_acceleration = true;
};

// Generalized hypergeometric series with cancellation-aware summation.
// Escalates plain-sum -> log-domain-signed -> extended-precision and
// reports the method, term count and cancellation ratio.
EvalResult eval_pfq(const HyperSeries& series, const SummationPolicy& policy = {});

}  // namespace gwf
