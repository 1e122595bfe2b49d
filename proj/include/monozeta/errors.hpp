#pragma once

#include <stdexcept>
#include <string>

namespace monozeta {

// Malformed textual input: expression grammars, family files, strata files.
// `position` is a 0-based character offset (or line number for line-oriented
// formats; the message says which).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A documented precondition of an operation does not hold for the given
// input (wrong variable counts, non-homogeneous input to a chart, degenerate
// lattice data, unsupported dimension, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace monozeta
