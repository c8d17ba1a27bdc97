#pragma once

#include <stdexcept>
#include <string>

namespace progof {

// Scheme construction failures.
struct SchemeInconsistent : std::invalid_argument {
    explicit SchemeInconsistent(const std::string& msg) : std::invalid_argument(msg) {}
};
struct SchemeInfeasible : std::invalid_argument {
    explicit SchemeInfeasible(const std::string& msg) : std::invalid_argument(msg) {}
};
struct EmptyScheme : std::invalid_argument {
    explicit EmptyScheme(const std::string& msg) : std::invalid_argument(msg) {}
};
struct IndivisibleM : std::invalid_argument {
    explicit IndivisibleM(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numeric domain violations (sigma <= 0, p outside (0,1), ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Estimation failures.
struct DegenerateSample : std::invalid_argument {
    explicit DegenerateSample(const std::string& msg) : std::invalid_argument(msg) {}
};
struct DegenerateDenominator : std::runtime_error {
    explicit DegenerateDenominator(const std::string& msg) : std::runtime_error(msg) {}
};

// Monte Carlo driver: too many replicates needed a redraw.
struct FitFailureCapExceeded : std::runtime_error {
    explicit FitFailureCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// File input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace progof
