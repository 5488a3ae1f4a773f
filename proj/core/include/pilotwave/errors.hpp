#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pilotwave {

// Bad grids, bad parameters, unparseable or inconsistent configs.
// The CLI maps this family to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidGridError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Runtime numerical failures (NaN/Inf fields, runaway norms, escaped
// trajectories).  The CLI maps this family to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what, std::size_t step = 0)
        : std::runtime_error(what), step_index(step) {}
    std::size_t step_index;
};

// A trajectory left the grid extent; the caller decides whether that ends
// the run.
class OutOfDomainError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace pilotwave
