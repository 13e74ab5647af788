#pragma once

#include <stdexcept>
#include <string>

namespace tropcount {

// Bad input or violated precondition: malformed files, invalid paths,
// degenerate cells, inconsistent arguments. Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant, i.e. a "cannot happen" state. Maps to CLI
// exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tropcount
