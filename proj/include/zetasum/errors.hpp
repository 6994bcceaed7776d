#pragma once

#include <stdexcept>
#include <string>

namespace zetasum {

// Requested series does not converge (or an index makes it divergent).
struct divergence_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested digit budget cannot be met; reports how many digits were reached.
struct precision_error : std::runtime_error {
    int achieved_digits;
    precision_error(const std::string& msg, int achieved)
        : std::runtime_error(msg), achieved_digits(achieved) {}
};

// Input is valid mathematics but outside the supported envelope.
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input; position is a 0-based byte offset into the input.
struct parse_error : std::invalid_argument {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg), position(pos) {}
};

} // namespace zetasum
