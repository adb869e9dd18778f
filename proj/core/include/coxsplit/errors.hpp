#ifndef COXSPLIT_ERRORS_HPP
#define COXSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxsplit {

/// Malformed input: bad JSON, unknown generator symbol, inconsistent matrix,
/// ill-formed subset or trace. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured cap (word length, closure size, enumeration rank, group
/// order, ...) was exceeded. Never a wrong answer. Maps to CLI exit code 3.
class ResourceBoundError : public std::runtime_error {
public:
    explicit ResourceBoundError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation's stated precondition does not hold for the given arguments
/// (e.g. looks_irreducible on a gog with a non-minimal edge label). This is a
/// finding about the input, not a usage bug. Maps to CLI exit code 2.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coxsplit

#endif
