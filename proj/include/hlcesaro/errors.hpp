#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlcesaro {

struct invalid_argument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct out_of_range : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Gamma evaluated at a non-positive integer.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A numerical method did not reach its stopping criterion.
struct method_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No method could produce an accepted value.
struct evaluation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct data_error : std::runtime_error {
    data_error(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what), line(line) {}
    std::size_t line;
};

}  // namespace hlcesaro
