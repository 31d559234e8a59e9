#pragma once

#include <stdexcept>
#include <string>

namespace blockforge {

/// Base error for all library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file; carries the 1-based line where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(what + " at line " + std::to_string(line)), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace blockforge
