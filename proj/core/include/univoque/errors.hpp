#pragma once

#include <stdexcept>
#include <string>

namespace univoque {

// Precondition / scope violations (bad digit, base out of range, M != 1 where required, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when interval arithmetic cannot resolve a decision at the precision cap.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (digit sequences, decimal numbers).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace univoque
