#pragma once

#include <stdexcept>
#include <string>

namespace moran {

struct InvalidDigit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidLabel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

struct OrderMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ElementCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when the matrix-product count and the geometric oracle disagree
// at some depth for the same intercept.
struct VerificationFailure : std::runtime_error {
    VerificationFailure(int depth_, std::string matrix_value_, std::string oracle_value_)
        : std::runtime_error("count mismatch at depth " + std::to_string(depth_) +
                             ": matrix=" + matrix_value_ + " oracle=" + oracle_value_),
          depth(depth_),
          matrix_value(std::move(matrix_value_)),
          oracle_value(std::move(oracle_value_)) {}

    int depth;
    std::string matrix_value;
    std::string oracle_value;
};

}  // namespace moran
