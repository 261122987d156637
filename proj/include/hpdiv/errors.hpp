#pragma once

#include <stdexcept>
#include <string>

namespace hpdiv {

// Bad user input: wrong shapes, malformed files, parameters out of range.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mathematically invalid request: log of a non-PD matrix, non-unit trace
// where unit trace is required, and the like.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// An iterative method ran out of budget. Carries the best available result.
struct numerical_error : std::runtime_error {
    double best_value;
    double achieved_error;

    numerical_error(const std::string& what, double value, double error)
        : std::runtime_error(what), best_value(value), achieved_error(error) {}
};

}  // namespace hpdiv
