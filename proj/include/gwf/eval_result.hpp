#pragma once

#include <cstdint>
#include <string>

namespace gwf {

enum class Method {
    PlainSum,
    LogDomainSigned,
    ExtendedPrecision,
    Quadrature,
    Asymptotic,
};

inline const char* method_name(Method m) {
    switch (m) {
        case Method::PlainSum: return "plain-sum";
        case Method::LogDomainSigned: return "log-domain-signed";
        case Method::ExtendedPrecision: return "extended-precision";
        case Method::Quadrature: return "quadrature";
        case Method::Asymptotic: return "asymptotic";
    }
    return "unknown";
}

// Value plus diagnostics. cancellation_ratio is max |partial sum| / |result|,
// a proxy for the number of digits lost to alternating-series cancellation.
struct EvalResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    Method method = Method::PlainSum;
    std::int64_t terms_or_nodes = 0;
    double cancellation_ratio = 1.0;
    bool warning = false;
};

}  // namespace gwf
