#pragma once

#include <stdexcept>
#include <string>

namespace composa {

struct ClassMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotInvertibleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DimMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedRepresentationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Syntax error with the byte offset of the offending token.
struct ParseError : std::runtime_error {
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what),
          offset(offset) {}
    std::size_t offset;
};

struct NoSolutionError : std::runtime_error {
    NoSolutionError(const std::string& witness, const std::string& what)
        : std::runtime_error(what + " (witness: " + witness + ")"), witness(witness) {}
    std::string witness;
};

struct InsufficientRankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace composa
