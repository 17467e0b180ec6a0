#ifndef DCOVER_ERRORS_HPP
#define DCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcover {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally or numerically invalid input (bad field, mismatched lengths,
// non-finite coordinate, precondition violation). Message names the field.
struct ValidationError : Error {
    using Error::Error;
};

// A coverage requirement that provably cannot be met with the given budget.
struct InfeasibleError : Error {
    using Error::Error;
};

// Malformed textual input (LP solution listings, CSV rows). Message carries
// the 1-based line number where parsing failed.
struct ParseError : Error {
    using Error::Error;
};

// Filesystem-level failure (missing file, unwritable path).
struct IoError : Error {
    using Error::Error;
};

} // namespace dcover

#endif
