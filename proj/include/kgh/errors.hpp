#pragma once

#include <stdexcept>
#include <string>

namespace kgh {

/// Malformed arguments: out-of-range ids, dimension mismatches, bad parameters.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Text or JSON input that does not follow the documented formats.
class ParseError : public InputError {
public:
    explicit ParseError(const std::string& what) : InputError(what) {}
};

/// A size guard refused the computation (instance too large for desk scale).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A hypergraph with a singleton edge has no proper coloring at all.
class UncolorableError : public std::domain_error {
public:
    explicit UncolorableError(const std::string& what) : std::domain_error(what) {}
};

/// An object whose existence is guaranteed by a theorem was not found.
/// This always indicates a bug, never a property of the input.
class InternalInconsistency : public std::logic_error {
public:
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

} // namespace kgh
