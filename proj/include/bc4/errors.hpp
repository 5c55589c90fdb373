#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bc4 {

/// Bad argument to a library operation (out-of-domain parameter, wrong shape).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed hypergraph text. `line()` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A witness refers to vertices or edges that do not exist in the hypergraph.
class InvalidWitness : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace bc4
