#pragma once

#include <stdexcept>
#include <string>

namespace gwf {

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : NumericalError {
    explicit DomainError(const std::string& msg) : NumericalError(msg) {}
};

// Gamma pole, zero/negative-integer denominator parameter, etc.
struct PoleError : DomainError {
    explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

struct DivergenceError : NumericalError {
    explicit DivergenceError(const std::string& msg) : NumericalError(msg) {}
};

// Cancellation exceeded the extended-precision budget.
struct PrecisionExhaustedError : NumericalError {
    explicit PrecisionExhaustedError(const std::string& msg) : NumericalError(msg) {}
};

struct QuadratureError : NumericalError {
    explicit QuadratureError(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace gwf
