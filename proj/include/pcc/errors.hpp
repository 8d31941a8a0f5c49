#pragma once

#include <stdexcept>

namespace pcc {

// Invalid parameter values (negative rates, probabilities outside [0,1], ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed command line, config file or sweep specification.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An iterative procedure failed or produced non-finite output.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Monte Carlo estimator lacks the data it needs.
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pcc
